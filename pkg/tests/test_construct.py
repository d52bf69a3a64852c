import itertools

import pytest

from antichains import (
    KSpec,
    canonical_antichain,
    conjectured_max_objective,
    conjectured_min_antichain,
    construction_objective,
    count_k_cliques,
    general_graph,
    is_k_saturated,
    is_k_sparse,
    k_cliques,
    l4_graph,
    strong_maximality_criterion,
    triangle_count,
)


def oracle_l4_edges(n: int) -> set[tuple[int, int]]:
    """Independent literal transcription of the four residue cases."""
    m, r = divmod(n, 4)
    edges = set()
    if r == 0:
        edges |= {(i, j) for i in range(1, 2 * m + 1) for j in range(2 * m + 1, 4 * m + 1)}
        edges |= {(2 * i - 1, 2 * i) for i in range(1, 2 * m + 1)}
    elif r == 1:
        edges |= {(i, j) for i in range(1, 2 * m + 1) for j in range(2 * m + 1, 4 * m + 2)}
        edges |= {(2 * i - 1, 2 * i) for i in range(1, 2 * m + 1)}
        edges.add((4 * m, 4 * m + 1))
    elif r == 2:
        edges |= {(i, j) for i in range(1, 2 * m + 1) for j in range(2 * m + 1, 4 * m + 3)}
        edges |= {(2 * i - 1, 2 * i) for i in range(1, 2 * m + 2)}
    else:
        left = list(range(1, 2 * m + 1)) + [4 * m + 3]
        edges |= {(min(i, j), max(i, j)) for i in left for j in range(2 * m + 1, 4 * m + 3)}
        edges |= {(2 * i - 1, 2 * i) for i in range(1, 2 * m + 2)}
        edges.add((2 * m, 4 * m + 3))
    return edges


def oracle_count_4cliques(edges: set[tuple[int, int]], n: int) -> int:
    adj = {(u, v) for u, v in edges} | {(v, u) for u, v in edges}
    cnt = 0
    for quad in itertools.combinations(range(1, n + 1), 4):
        if all((a, b) in adj for a, b in itertools.combinations(quad, 2)):
            cnt += 1
    return cnt


class TestGeneralGraph:
    def test_n8_sizes(self):
        g = general_graph(8, KSpec.of((2, 4)))
        assert g.edge_count() == 20
        assert count_k_cliques(g, 4) == 4

    def test_n10_l5(self):
        ks = KSpec.of((2, 5))
        g = general_graph(10, ks)
        # |A| = 4 in blocks of 2, |B| = 3 in one block, 3 isolated
        assert g.degrees()[:4] == [4, 4, 4, 4]
        assert g.degrees()[4:7] == [6, 6, 6]
        assert g.degrees()[7:] == [0, 0, 0]
        assert is_k_sparse(g, ks)
        adm = canonical_antichain(g, ks)
        assert set(adm.profile()) == {2, 5}
        assert adm.profile()[5] == 2

    def test_exact_fit_n_equals_l(self):
        g = general_graph(4, KSpec.of((2, 4)))
        assert g.edge_count() == 6  # complete graph
        assert g.edge_count() - count_k_cliques(g, 4) == 5

    def test_n_below_l_rejected(self):
        with pytest.raises(ValueError):
            general_graph(4, KSpec.of((2, 5)))

    def test_saturated_sparse_and_strongly_maximal(self):
        for n, levels in ((8, (2, 4)), (11, (2, 5)), (12, (2, 3, 6)), (9, (2, 3))):
            ks = KSpec.of(levels)
            g = general_graph(n, ks)
            assert is_k_saturated(g, ks)
            assert is_k_sparse(g, ks)
            assert strong_maximality_criterion(g, ks)

    def test_every_small_clique_in_top_clique(self):
        ks = KSpec.of((2, 6))
        g = general_graph(13, ks)
        top = [c.mask for c in k_cliques(g, 6)]
        for q in range(2, 6):
            for c in k_cliques(g, q):
                assert any(c.mask & t == c.mask for t in top)


class TestL4Graph:
    @pytest.mark.parametrize("n", list(range(4, 31)))
    def test_matches_case_transcription(self, n):
        g = l4_graph(n)
        assert set(g.edges()) == oracle_l4_edges(n)

    @pytest.mark.parametrize("n", list(range(4, 21)))
    def test_objective_against_oracle_counts(self, n):
        edges = oracle_l4_edges(n)
        obj = len(edges) - oracle_count_4cliques(edges, n)
        assert construction_objective(n, 4) == obj

    def test_n8(self):
        g = l4_graph(8)
        assert g.edge_count() == 20
        assert count_k_cliques(g, 4) == 4
        assert triangle_count(g) == 16

    def test_n9(self):
        g = l4_graph(9)
        assert g.edge_count() == 25
        assert count_k_cliques(g, 4) == 6
        assert construction_objective(9, 4) == 19

    def test_n11(self):
        assert construction_objective(11, 4) == 27

    def test_saturated(self):
        ks = KSpec.of((2, 4))
        for n in range(4, 26):
            assert is_k_saturated(l4_graph(n), ks)

    def test_too_small(self):
        with pytest.raises(ValueError):
            l4_graph(3)


class TestClosedForms:
    def test_small_values(self):
        assert conjectured_max_objective(8) == 16
        assert conjectured_max_objective(9) == 19
        assert conjectured_max_objective(4) == 5
        assert conjectured_min_antichain(8) == 12
        assert conjectured_min_antichain(9) == 17
        assert conjectured_min_antichain(16) == 64

    def test_table_column(self):
        expected = [1, 3, 6, 9, 12, 17, 22, 28, 33, 41, 48, 57, 64]
        got = [n * (n - 1) // 2 - conjectured_max_objective(n) for n in range(4, 17)]
        assert got == expected
        assert [conjectured_min_antichain(n) for n in range(4, 17)] == expected

    def test_complement_identity(self):
        for n in range(4, 2001):
            assert conjectured_min_antichain(n) == n * (n - 1) // 2 - conjectured_max_objective(n)

    def test_objective_matches_explicit_graph_sample(self):
        for n in (4, 7, 12, 30, 61, 100, 257):
            assert construction_objective(n, 4) == conjectured_max_objective(n)


class TestConstructionObjective:
    def test_values(self):
        assert construction_objective(8, 4) == 16
        assert construction_objective(12, 4) == 33
        assert construction_objective(7, 4) == 12
        assert 21 - construction_objective(7, 4) == 9

    def test_higher_levels(self):
        # general block construction, counted on the graph
        ks = KSpec.of((2, 5))
        g = general_graph(10, ks)
        assert construction_objective(10, 5) == g.edge_count() - count_k_cliques(g, 5)

    def test_validation(self):
        with pytest.raises(ValueError):
            construction_objective(4, 5)
        with pytest.raises(ValueError):
            construction_objective(10, 2)
