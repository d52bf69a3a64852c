"""Exhaustive exact search over all graphs on n vertices (4 <= n <= 8).

Graphs are encoded as integers: bit s of the encoding is edge slot s, the
slots being the pairs (1,2), (1,3), ..., (1,n), (2,3), ... in
lexicographic order.  The search scans every encoding, keeps the
K-saturated graphs, and maximizes |E| minus the minimum number of non-pair
members over the antichains sharing the graph.  The reported minimum
antichain size is C(n,2) minus that maximum.

Two engines:

* "fast": compiled scan (numba).  K = {2,3} and {2,4} are closed-form per
  graph; for K = {2,3,4} sparse graphs are resolved in-kernel and the rare
  non-sparse candidates get the exact branch-and-bound.
* "reference": plain Python over the same encoding space, one graph at a
  time through the duality layer.  Slow; exists to cross-validate the
  fast engine (practical for n <= 6).

Results are deterministic and independent of the worker count: chunks are
merged by (max objective, then least encoding).
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import duality
from .construct import conjectured_max_objective, general_graph, l4_graph
from .graph import Graph, graph_to_json, k_cliques
from .setfam import KSpec, SetFamily, family_to_json, profile

_FAST_KS = {(2, 3), (2, 4), (2, 3, 4)}


def _slots(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def encode_graph(g: Graph) -> int:
    enc = 0
    for s, (u, v) in enumerate(_slots(g.n)):
        if g.rows[u] >> v & 1:
            enc |= 1 << s
    return enc


def decode_graph(n: int, enc: int) -> Graph:
    rows = [0] * n
    for s, (u, v) in enumerate(_slots(n)):
        if enc >> s & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@dataclass
class SearchResult:
    n: int
    kspec: KSpec
    best_objective: int
    min_antichain_size: int
    profile: dict[int, int]
    witness_graph: Graph
    witness_antichain: SetFamily
    graphs_scanned: int
    elapsed: float
    optimal_profiles: list[dict[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "K": list(self.kspec.levels),
            "best_objective": self.best_objective,
            "min_antichain_size": self.min_antichain_size,
            "profile": {str(k): v for k, v in self.profile.items()},
            "optimal_profiles": [{str(k): v for k, v in p.items()} for p in self.optimal_profiles],
            "witness_graph": graph_to_json(self.witness_graph),
            "witness_antichain": family_to_json(self.witness_antichain),
            "graphs_scanned": self.graphs_scanned,
            "elapsed_seconds": self.elapsed,
        }


def _construction_seed(n: int, ks: KSpec) -> int:
    """Objective of the explicit construction: an achievable incumbent."""
    g = l4_graph(n) if ks.l == 4 else general_graph(n, ks)
    if not duality.is_k_saturated(g, ks):  # pragma: no cover - structural guarantee
        return 0
    return g.edge_count() - duality.canonical_antichain(g, ks).nonpair_count()


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        env = os.environ.get("ANTICHAIN_JOBS", "")
        jobs = int(env) if env.isdigit() and int(env) > 0 else 1
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    return jobs


def _chunk_ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    chunk = max(1, min(1 << 22, -(-total // jobs)))
    return [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]


def _unpack_234_profile(packed: int) -> dict[int, int]:
    return {2: packed & 63, 3: (packed >> 6) & 127, 4: packed >> 13}


def _search_fast(n, ks, seed, prune, sym_cut, jobs):
    from . import _kernels

    slots = _slots(n)
    nslots = len(slots)
    us = np.array([u for u, _ in slots], np.int64)
    vs = np.array([v for _, v in slots], np.int64)
    total = 1 << nslots
    ranges = _chunk_ranges(total, jobs)
    levels = ks.levels

    if levels in ((2, 3), (2, 4)):
        kk = levels[1]

        def run(rg):
            return _kernels._scan_pair_level(
                n, us, vs, rg[0], rg[1], kk, seed, prune, sym_cut
            )

        with ThreadPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(run, ranges))
        best, bestenc, emask = -1, -1, 0
        for b, enc, em in parts:
            if b > best:
                best, bestenc, emask = b, enc, em
            elif b == best and b >= 0:
                emask |= em
                if enc < bestenc:
                    bestenc = enc
        profiles = []
        for e in range(nslots + 1):
            if emask >> e & 1:
                profiles.append({2: nslots - e, kk: e - best})
        return int(best), int(bestenc), profiles, total

    # K = {2,3,4}
    def run(rg):
        lo, hi = rg
        suspects = np.empty(hi - lo, np.int64)
        profs = np.empty(1024, np.int64)
        b, enc, nsus, nprof, overflow = _kernels._scan_234(
            n, us, vs, lo, hi, seed, prune, sym_cut, suspects, profs
        )
        return b, enc, suspects[:nsus].copy(), profs[:nprof].copy(), overflow

    with ThreadPoolExecutor(max_workers=jobs) as ex:
        parts = list(ex.map(run, ranges))

    best, bestenc = -1, -1
    packed_profiles: set[int] = set()
    suspects: list[int] = []
    for b, enc, sus, prof, overflow in parts:
        if overflow:  # pragma: no cover - cap is generous
            raise RuntimeError("optimal-profile buffer overflow; raise the cap")
        suspects.extend(int(s) for s in sus)
        if b > best:
            best, bestenc = b, enc
            packed_profiles = set(int(p) for p in prof)
        elif b == best and b >= 0:
            packed_profiles |= set(int(p) for p in prof)
            if enc < bestenc:
                bestenc = enc
    # exact resolution of the non-sparse candidates
    extra_profiles: list[dict[int, int]] = []
    for enc in sorted(suspects):
        g = decode_graph(n, enc)
        val = g.edge_count() - duality.min_nonpair_count(g, ks)
        if val > best or (val == best and enc < bestenc):
            if val > best:
                packed_profiles = set()
                extra_profiles = []
            best, bestenc = val, enc
        if val == best:
            adm, _ = duality.min_antichain_for_graph(g, ks)
            p = adm.profile()
            if p not in extra_profiles:
                extra_profiles.append(p)
    profiles = [_unpack_234_profile(p) for p in sorted(packed_profiles)]
    for p in extra_profiles:
        if p not in profiles:
            profiles.append(p)
    return int(best), int(bestenc), profiles, total


def _search_reference(n, ks, prune, seed):
    # any nonempty saturated graph has a non-pair member, so obj <= |E| - 1
    total = 1 << (n * (n - 1) // 2)
    best, bestenc = -1, -1
    profiles: list[dict[int, int]] = []
    for enc in range(total):
        if prune and (enc == 0 or enc.bit_count() - 1 < max(best, seed)):
            continue
        g = decode_graph(n, enc)
        if not duality.is_k_saturated(g, ks):
            continue
        val = g.edge_count() - duality.min_nonpair_count(g, ks)
        if val > best:
            best, bestenc = val, enc
            profiles = []
        if val == best:
            adm, _ = duality.min_antichain_for_graph(g, ks)
            p = adm.profile()
            if p not in profiles:
                profiles.append(p)
            if enc < bestenc:
                bestenc = enc
    return best, bestenc, profiles, total


def search_exact(
    n: int,
    ks: KSpec,
    *,
    deep: bool = False,
    jobs: int | None = None,
    prune: bool = True,
    sym_cut: bool = False,
    engine: str = "fast",
) -> SearchResult:
    """Scan all 2^C(n,2) graphs on n vertices and maximize the objective.

    n = 8 (268M encodings) must be requested explicitly with deep=True.
    `prune` skips graphs whose edge count already rules them out (sound);
    `sym_cut` additionally keeps only graphs where vertex 1 has maximum
    degree (isomorphism-safe for the optimum value, but the witness is
    then the least encoding within the cut space only).
    """
    if not 4 <= n <= 8:
        raise ValueError("exact search supports 4 <= n <= 8")
    if n == 8 and not deep:
        raise ValueError("n = 8 scans 2^28 graphs; pass deep=True (CLI: --deep)")
    if ks.l > n:
        raise ValueError(f"largest level of K={ks} exceeds n={n}")
    if engine not in ("fast", "reference"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "fast" and ks.levels not in _FAST_KS:
        raise ValueError(
            f"fast engine supports K in {{2,3}}, {{2,4}}, {{2,3,4}}; "
            f"use engine='reference' for K={ks}"
        )
    jobs = _resolve_jobs(jobs)
    seed = _construction_seed(n, ks)
    t0 = time.perf_counter()
    if engine == "fast":
        best, bestenc, profiles, scanned = _search_fast(n, ks, seed, prune, sym_cut, jobs)
    else:
        best, bestenc, profiles, scanned = _search_reference(n, ks, prune, seed)
    if best < 0:  # pragma: no cover - constructions guarantee a feasible point
        raise RuntimeError("no saturated graph found; this cannot happen for n >= 4")
    witness = decode_graph(n, bestenc)
    adm, _ = duality.min_antichain_for_graph(witness, ks)
    if witness.edge_count() - adm.nonpair_count() != best:  # pragma: no cover
        raise RuntimeError("engine disagreement between scan and exact minimizer")
    elapsed = time.perf_counter() - t0
    nslots = n * (n - 1) // 2
    return SearchResult(
        n=n,
        kspec=ks,
        best_objective=best,
        min_antichain_size=nslots - best,
        profile=adm.profile(),
        witness_graph=witness,
        witness_antichain=adm.family,
        graphs_scanned=scanned,
        elapsed=elapsed,
        optimal_profiles=sorted(profiles, key=lambda p: sorted(p.items())),
    )


# ---------------------------------------------------------------------------
# witness verification


@dataclass
class WitnessReport:
    n: int
    kspec: KSpec
    saturated: bool
    pair_slice_matches_nonedges: bool
    members_have_admissible_sizes: bool
    nonpair_members_are_cliques: bool
    antichain: bool
    cliques_all_covered: bool
    maximal: bool
    edges: int
    objective: int
    antichain_size: int
    profile: dict[int, int]
    degrees: list[int]
    regular: bool
    per_edge_clique_counts: dict[int, tuple[int, int]]
    per_vertex_clique_counts: dict[int, tuple[int, int]]
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "K": list(self.kspec.levels),
            "ok": self.ok,
            "saturated": self.saturated,
            "pair_slice_matches_nonedges": self.pair_slice_matches_nonedges,
            "members_have_admissible_sizes": self.members_have_admissible_sizes,
            "nonpair_members_are_cliques": self.nonpair_members_are_cliques,
            "antichain": self.antichain,
            "cliques_all_covered": self.cliques_all_covered,
            "maximal": self.maximal,
            "edges": self.edges,
            "objective": self.objective,
            "antichain_size": self.antichain_size,
            "profile": {str(k): v for k, v in self.profile.items()},
            "degrees": self.degrees,
            "regular": self.regular,
            "per_edge_clique_counts": {
                str(k): list(v) for k, v in self.per_edge_clique_counts.items()
            },
            "per_vertex_clique_counts": {
                str(k): list(v) for k, v in self.per_vertex_clique_counts.items()
            },
            "problems": self.problems,
        }
        return out


def verify_witness(g: Graph, fam: SetFamily, ks: KSpec) -> WitnessReport:
    """Certify an externally supplied (graph, antichain) pair for K.

    Checks saturation, the admissibility conditions, maximality, and
    reports the objective, size, profile, regularity and per-edge/vertex
    clique multiplicities.  Failures land in `problems`, never in
    exceptions.
    """
    problems: list[str] = []
    if fam.ground != g.n:
        problems.append(f"family ground {fam.ground} differs from graph order {g.n}")
    saturated = duality.is_k_saturated(g, ks)
    if not saturated:
        problems.append("graph is not K-saturated")

    from .graph import nonedges as _nonedges

    slice_masks: dict[int, list[int]] = {}
    for m in fam:
        slice_masks.setdefault(m.cardinality(), []).append(m.mask)
    sizes_ok = set(slice_masks) <= set(ks.levels)
    if not sizes_ok:
        bad = sorted(set(slice_masks) - set(ks.levels))
        problems.append(f"member sizes {bad} outside K={ks}")
    pair_ok = sorted(slice_masks.get(2, [])) == sorted(m.mask for m in _nonedges(g))
    if not pair_ok:
        problems.append("2-set slice is not the graph's non-edge set")
    cliques_ok = all(
        duality._is_clique_mask(g, m)
        for k, masks in slice_masks.items()
        if k != 2
        for m in masks
    )
    if not cliques_ok:
        problems.append("some non-pair member does not induce a clique")
    try:
        anti = duality.is_antichain(fam)
    except Exception as exc:
        anti = False
        problems.append(f"antichain test failed: {exc}")
    if not anti:
        problems.append("family is not an antichain")
    member_masks = fam.masks()
    covered = True
    for k in ks.upper_levels():
        for c in k_cliques(g, k):
            if not any(duality._comparable(c.mask, m) for m in member_masks):
                covered = False
                problems.append(f"{k}-clique {c.points()} comparable to no member")
    maximal = False
    if anti and sizes_ok:
        try:
            maximal = duality.is_maximal_k_antichain(fam, ks)
        except ValueError:
            maximal = False
    if not maximal:
        problems.append("family is not a maximal K-antichain")

    nonpair = sum(len(v) for k, v in slice_masks.items() if k != 2)
    degrees = g.degrees()
    per_edge: dict[int, tuple[int, int]] = {}
    per_vertex: dict[int, tuple[int, int]] = {}
    for k in ks.upper_levels():
        cl = [c.mask for c in k_cliques(g, k)]
        edge_counts = []
        for u, v in g.edges():
            pair = (1 << (u - 1)) | (1 << (v - 1))
            edge_counts.append(sum(1 for c in cl if c & pair == pair))
        vert_counts = [sum(1 for c in cl if c >> i & 1) for i in range(g.n)]
        per_edge[k] = (min(edge_counts), max(edge_counts)) if edge_counts else (0, 0)
        per_vertex[k] = (min(vert_counts), max(vert_counts)) if vert_counts else (0, 0)

    return WitnessReport(
        n=g.n,
        kspec=ks,
        saturated=saturated,
        pair_slice_matches_nonedges=pair_ok,
        members_have_admissible_sizes=sizes_ok,
        nonpair_members_are_cliques=cliques_ok,
        antichain=anti,
        cliques_all_covered=covered,
        maximal=maximal,
        edges=g.edge_count(),
        objective=g.edge_count() - nonpair,
        antichain_size=len(fam),
        profile=profile(fam),
        degrees=degrees,
        regular=len(set(degrees)) == 1,
        per_edge_clique_counts=per_edge,
        per_vertex_clique_counts=per_vertex,
        problems=problems,
    )


# ---------------------------------------------------------------------------
# summary table


def table_rows(n_max: int, deep: bool = False) -> list[dict]:
    """Rows of the small-n summary: exact search values for both standard K
    (search-backed up to n = 7, or 8 with deep=True), plus the
    construction's antichain size C(n,2) - conjectured objective.
    """
    if n_max < 4:
        raise ValueError("need n_max >= 4")
    search_cap = 8 if deep else 7
    rows = []
    for n in range(4, n_max + 1):
        row: dict = {"n": n, "construction": n * (n - 1) // 2 - conjectured_max_objective(n)}
        for levels in ((2, 4), (2, 3, 4)):
            key = "".join(map(str, levels))
            if n <= search_cap:
                res = search_exact(n, KSpec.of(levels), deep=deep)
                row[f"size_{key}"] = res.min_antichain_size
                row[f"profile_{key}"] = res.profile
                row[f"exact_{key}"] = True
            else:
                row[f"size_{key}"] = row["construction"]
                row[f"profile_{key}"] = None
                row[f"exact_{key}"] = False
        rows.append(row)
    return rows


def table_reproduce(n_max: int, deep: bool = False) -> str:
    """Formatted small-n summary table.  Rows beyond the search range show
    the construction value as an upper bound (marked '<=')."""
    rows = table_rows(n_max, deep=deep)
    lines = []
    header = f"{'n':>3} | {'K={2,4}':>18} | {'K={2,3,4}':>22} | {'construction':>12}"
    lines.append(header)
    lines.append("-" * len(header))
    for row in rows:
        cells = []
        for key, ks in (("24", (2, 4)), ("234", (2, 3, 4))):
            size = row[f"size_{key}"]
            if row[f"exact_{key}"]:
                prof = row[f"profile_{key}"]
                ptxt = "(" + ",".join(str(prof[k]) for k in ks) + ")"
                cells.append(f"{size} {ptxt}")
            else:
                cells.append(f"<= {size}")
        lines.append(
            f"{row['n']:>3} | {cells[0]:>18} | {cells[1]:>22} | {row['construction']:>12}"
        )
    return "\n".join(lines) + "\n"
