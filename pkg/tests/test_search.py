import json

import pytest

from antichains import (
    KSpec,
    SetFamily,
    canonical_antichain,
    construction_objective,
    decode_graph,
    encode_graph,
    from_edges,
    l4_graph,
    search_exact,
    table_reproduce,
    table_rows,
    verify_witness,
)

K24 = KSpec.of((2, 4))
K234 = KSpec.of((2, 3, 4))

# size and profile columns of the small-n reference results
EXPECTED = {
    (4, (2, 4)): (1, {2: 0, 4: 1}),
    (5, (2, 4)): (3, {2: 1, 4: 2}),
    (6, (2, 4)): (6, {2: 2, 4: 4}),
    (7, (2, 4)): (9, {2: 5, 4: 4}),
    (4, (2, 3, 4)): (1, {2: 0, 3: 0, 4: 1}),
    (5, (2, 3, 4)): (3, {2: 1, 3: 0, 4: 2}),
    (6, (2, 3, 4)): (6, {2: 2, 3: 0, 4: 4}),
    (7, (2, 3, 4)): (9, {2: 5, 3: 0, 4: 4}),
}


def _result_key(res):
    return (
        res.best_objective,
        res.min_antichain_size,
        encode_graph(res.witness_graph),
        res.optimal_profiles,
    )


class TestSmallN:
    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    @pytest.mark.parametrize("levels", [(2, 4), (2, 3, 4)])
    def test_reference_values(self, n, levels):
        size, paper_profile = EXPECTED[(n, levels)]
        res = search_exact(n, KSpec.of(levels))
        assert res.min_antichain_size == size
        assert res.best_objective + res.min_antichain_size == n * (n - 1) // 2
        # the reported profile belongs to some optimum; the reference
        # profile must appear among the optimal profiles found
        assert res.profile in res.optimal_profiles
        assert paper_profile in res.optimal_profiles

    def test_witness_is_valid(self):
        for n in (4, 5, 6):
            for ks in (K24, K234):
                res = search_exact(n, ks)
                rep = verify_witness(res.witness_graph, res.witness_antichain, ks)
                assert rep.ok, rep.problems
                assert rep.objective == res.best_objective

    def test_construction_is_feasible_point(self):
        for n in (4, 5, 6, 7):
            res = search_exact(n, K24)
            assert res.best_objective >= construction_objective(n, 4)

    def test_pair_K_dominates_triple_K(self):
        for n in (4, 5, 6, 7):
            a = search_exact(n, K24)
            b = search_exact(n, K234)
            assert a.min_antichain_size <= b.min_antichain_size

    def test_k23_supported(self):
        res = search_exact(5, KSpec.of((2, 3)))
        rep = verify_witness(res.witness_graph, res.witness_antichain, KSpec.of((2, 3)))
        assert rep.ok


class TestEngines:
    @pytest.mark.parametrize("levels", [(2, 3), (2, 4), (2, 3, 4)])
    def test_reference_matches_fast(self, levels):
        for n in (4, 5):
            if max(levels) > n:
                continue
            a = search_exact(n, KSpec.of(levels), engine="fast")
            b = search_exact(n, KSpec.of(levels), engine="reference")
            assert _result_key(a) == _result_key(b)

    def test_reference_matches_fast_n6(self):
        a = search_exact(6, K234, engine="fast")
        b = search_exact(6, K234, engine="reference")
        assert _result_key(a) == _result_key(b)

    def test_no_prune_matches(self):
        for levels in ((2, 4), (2, 3, 4)):
            a = search_exact(6, KSpec.of(levels))
            b = search_exact(6, KSpec.of(levels), prune=False)
            assert _result_key(a) == _result_key(b)

    def test_jobs_deterministic(self):
        for ks in (K24, K234):
            a = search_exact(7, ks)
            for jobs in (2, 3, 7):
                b = search_exact(7, ks, jobs=jobs)
                assert _result_key(a) == _result_key(b)

    def test_sym_cut_preserves_value(self):
        for levels in ((2, 4), (2, 3, 4)):
            a = search_exact(6, KSpec.of(levels))
            b = search_exact(6, KSpec.of(levels), sym_cut=True)
            assert a.best_objective == b.best_objective

    def test_unknown_K_fast_engine(self):
        with pytest.raises(ValueError, match="reference"):
            search_exact(6, KSpec.of((2, 5)), engine="fast")

    def test_reference_engine_other_K(self):
        res = search_exact(5, KSpec.of((2, 5)), engine="reference")
        assert res.min_antichain_size + res.best_objective == 10
        rep = verify_witness(res.witness_graph, res.witness_antichain, KSpec.of((2, 5)))
        assert rep.ok


class TestValidation:
    def test_n_range(self):
        with pytest.raises(ValueError):
            search_exact(3, K24)
        with pytest.raises(ValueError):
            search_exact(9, K24)

    def test_n8_needs_deep(self):
        with pytest.raises(ValueError, match="deep"):
            search_exact(8, K24)

    def test_level_exceeds_n(self):
        with pytest.raises(ValueError):
            search_exact(4, KSpec.of((2, 5)))


class TestEncoding:
    def test_round_trip(self):
        import random

        rng = random.Random(1)
        for _ in range(100):
            n = rng.randint(2, 9)
            enc = rng.randrange(1 << (n * (n - 1) // 2))
            assert encode_graph(decode_graph(n, enc)) == enc


class TestSearchResult:
    def test_json(self):
        res = search_exact(5, K24)
        data = res.to_json()
        blob = json.loads(json.dumps(data))
        assert blob["min_antichain_size"] == 3
        assert blob["graphs_scanned"] == 1 << 10
        assert blob["witness_graph"]["n"] == 5

    def test_scanned_counts_everything(self):
        res = search_exact(6, K24)
        assert res.graphs_scanned == 1 << 15


class TestVerifyWitness:
    def test_witness10(self, witness10):
        g, fam = witness10
        rep = verify_witness(g, fam, K24)
        assert rep.ok
        assert rep.edges == 30
        assert rep.regular and rep.degrees[0] == 6
        assert rep.per_edge_clique_counts[4] == (1, 1)
        assert rep.per_vertex_clique_counts[4] == (2, 2)
        assert rep.objective == 25
        assert rep.antichain_size == 20
        assert rep.profile == {2: 15, 4: 5}

    def test_l4_12(self):
        g = l4_graph(12)
        adm = canonical_antichain(g, K24)
        rep = verify_witness(g, adm.family, K24)
        assert rep.ok
        assert rep.objective == 33

    def test_k4_single_member(self):
        import itertools

        g = from_edges(4, list(itertools.combinations(range(1, 5), 2)))
        fam = SetFamily.of([[1, 2, 3, 4]], 4)
        rep = verify_witness(g, fam, K24)
        assert rep.ok
        assert rep.objective == 5 and rep.antichain_size == 1

    def test_detects_problems(self, witness10):
        g, fam = witness10
        broken = SetFamily.from_masks(list(fam.masks())[1:], 10)  # drop a non-edge
        rep = verify_witness(g, broken, K24)
        assert not rep.ok
        assert any("non-edge" in p for p in rep.problems)
        unsat = from_edges(4, [(1, 2)])
        rep2 = verify_witness(unsat, SetFamily.of([], 4), K24)
        assert not rep2.ok


class TestTable:
    def test_rows_match_reference(self):
        rows = table_rows(7)
        expected_col = [1, 3, 6, 9]
        for row, exp in zip(rows, expected_col):
            assert row["size_24"] == exp
            assert row["size_234"] == exp
            assert row["construction"] == exp

    def test_bound_rows_beyond_search(self):
        rows = table_rows(10)
        r10 = rows[-1]
        assert r10["exact_24"] is False
        assert r10["size_24"] == 22  # construction upper bound
        assert r10["construction"] == 22

    def test_formatted(self):
        text = table_reproduce(6)
        assert "K={2,4}" in text and "construction" in text
        lines = [ln for ln in text.splitlines() if ln.strip().startswith(("4", "5", "6"))]
        assert len(lines) == 3
        text10 = table_reproduce(10)
        assert "<= 22" in text10
