"""Antichain <-> saturated-graph correspondence.

A maximal K-antichain determines a graph (edges = complement of its 2-set
slice) in which every edge lies in a k-clique for some k in K above 2
("K-saturated").  Conversely, a K-saturated graph carries a whole space of
maximal K-antichains sharing it; the canonical one takes every clique that
is not swallowed by a larger admissible clique.  This module implements
the membership conditions for that space, the canonical antichain, the
sparseness condition under which the canonical antichain has minimum size,
the structural criterion equivalent to strong maximality, and an exact
branch-and-bound minimizer over the space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, from_edges, k_cliques, nonedges
from .setfam import KSpec, PointSet, SetFamily, bits_of, is_antichain, is_k_antichain


def _comparable(a: int, b: int) -> bool:
    inter = a & b
    return inter == a or inter == b


def _common_neighbourhood(g: Graph, mask: int) -> int:
    common = (1 << g.n) - 1
    for p in bits_of(mask):
        common &= g.rows[p - 1]
    return common


def _has_clique_within(g: Graph, cand: int, size: int) -> bool:
    """Is there a clique of `size` vertices inside the candidate mask?"""
    if size <= 0:
        return True
    if cand.bit_count() < size:
        return False
    rest = cand
    while rest:
        lsb = rest & -rest
        v = lsb.bit_length()
        rest ^= lsb
        if _has_clique_within(g, rest & g.rows[v - 1], size - 1):
            return True
    return False


def _extends_to(g: Graph, mask: int, target_size: int) -> bool:
    """Is the clique `mask` contained in some clique of target_size vertices?"""
    need = target_size - mask.bit_count()
    return _has_clique_within(g, _common_neighbourhood(g, mask) & ~mask, need)


@dataclass(frozen=True)
class AdmissibleAntichain:
    """A maximal K-antichain presented with its graph and level slices.

    slices maps each level k in K to the tuple of member masks of size k
    (level 2 holds the non-edges of the graph).
    """

    graph: Graph
    kspec: KSpec
    slices: dict[int, tuple[int, ...]]

    @property
    def family(self) -> SetFamily:
        masks = []
        for k in self.kspec.levels:
            masks.extend(sorted(self.slices.get(k, ())))
        return SetFamily.from_masks(masks, self.graph.n)

    def size(self) -> int:
        return sum(len(v) for v in self.slices.values())

    def nonpair_count(self) -> int:
        return sum(len(v) for k, v in self.slices.items() if k != 2)

    def profile(self) -> dict[int, int]:
        return {k: len(self.slices.get(k, ())) for k in self.kspec.levels}

    def membership_problems(self) -> list[str]:
        """Violations of the admissibility conditions; empty means member."""
        g, ks = self.graph, self.kspec
        problems = []
        pair_slice = tuple(sorted(self.slices.get(2, ())))
        if pair_slice != tuple(sorted(f.mask for f in nonedges(g))):
            problems.append("2-set slice differs from the graph's non-edges")
        chosen = []
        for k in ks.upper_levels():
            for m in self.slices.get(k, ()):
                if m.bit_count() != k:
                    problems.append(f"level-{k} member of wrong size")
                if not _is_clique_mask(g, m):
                    problems.append(f"level-{k} member does not induce a clique")
                chosen.append(m)
        for a, b in combinations(chosen, 2):
            if a != b and _comparable(a, b):
                problems.append("chosen cliques are not pairwise incomparable")
                break
        for k in ks.upper_levels():
            for c in k_cliques(g, k):
                if not any(_comparable(c.mask, m) for m in chosen):
                    problems.append(f"{k}-clique {c.points()} comparable to no member")
        return problems

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "K": list(self.kspec.levels),
            "graph_edges": [list(e) for e in self.graph.edges()],
            "antichain": {
                str(k): [list(bits_of(m)) for m in sorted(self.slices.get(k, ()))]
                for k in self.kspec.levels
            },
        }


def admissible_from_json(data: dict | str) -> AdmissibleAntichain:
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    ks = KSpec.of(data["K"])
    g = from_edges(n, [tuple(e) for e in data["graph_edges"]])
    slices = {}
    for key, sets in data["antichain"].items():
        k = int(key)
        slices[k] = tuple(sorted(PointSet.of(s, n).mask for s in sets))
    return AdmissibleAntichain(g, ks, slices)


def _is_clique_mask(g: Graph, mask: int) -> bool:
    rest = mask
    while rest:
        lsb = rest & -rest
        v = lsb.bit_length()
        rest ^= lsb
        if rest & ~g.rows[v - 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# graph of an antichain, saturation, canonical antichain


def graph_of(fam: SetFamily) -> Graph:
    """The associated graph: edges are the pairs NOT in the family's 2-slice."""
    n = fam.ground
    full = (1 << n) - 1
    rows = [full & ~(1 << i) for i in range(n)]
    for m in fam:
        if m.cardinality() == 2:
            i, j = (p - 1 for p in m.points())
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)
    return Graph(n, tuple(rows))


def is_k_saturated(g: Graph, ks: KSpec) -> bool:
    """Every edge lies in a k-clique for some k in K above 2.

    Any such clique contains a kstar-clique through the edge, so the test
    reduces to the smallest upper level.  Levels above n are allowed; they
    simply make nonempty graphs unsaturated.
    """
    need = ks.kstar - 2
    for u in range(1, g.n + 1):
        row = g.rows[u - 1] >> u
        for j in bits_of(row):
            v = u + j
            cand = g.rows[u - 1] & g.rows[v - 1]
            if not _has_clique_within(g, cand, need):
                return False
    return True


def unsaturated_cliques(g: Graph, ks: KSpec, k: int) -> list[PointSet]:
    """The k-cliques not contained in any k'-clique for k' in K above k.

    Containment in any larger admissible clique is equivalent to
    containment in one of the next admissible size, so only that size is
    probed.
    """
    if k not in ks.levels:
        raise ValueError(f"k={k} is not a level of K={ks}")
    bigger = [kp for kp in ks.levels if kp > k]
    if k == 2:
        cliques = [PointSet((1 << (u - 1)) | (1 << (v - 1)), g.n) for u, v in g.edges()]
        cliques.sort(key=lambda s: s.mask)
    else:
        cliques = k_cliques(g, k)
    if not bigger:
        return cliques
    knext = min(bigger)
    return [c for c in cliques if not _extends_to(g, c.mask, knext)]


def canonical_antichain(g: Graph, ks: KSpec) -> AdmissibleAntichain:
    """Non-edges plus every clique not swallowed by a larger admissible one."""
    if not is_k_saturated(g, ks):
        raise ValueError(f"graph is not {ks}-saturated; it has no maximal {ks}-antichain")
    slices: dict[int, tuple[int, ...]] = {2: tuple(m.mask for m in nonedges(g))}
    for k in ks.upper_levels():
        slices[k] = tuple(c.mask for c in unsaturated_cliques(g, ks, k))
    return AdmissibleAntichain(g, ks, slices)


def is_k_sparse(g: Graph, ks: KSpec) -> bool:
    """Every non-pair canonical member contains a kstar-set private to it."""
    if not is_k_saturated(g, ks):
        raise ValueError(f"graph is not {ks}-saturated")
    members = []
    for k in ks.upper_levels():
        members.extend(c.mask for c in unsaturated_cliques(g, ks, k))
    kstar = ks.kstar
    for a in members:
        pts = list(bits_of(a))
        private = False
        for combo in combinations(pts, kstar):
            b = 0
            for p in combo:
                b |= 1 << (p - 1)
            holders = sum(1 for m in members if b & m == b)
            if holders == 1:
                private = True
                break
        if not private:
            return False
    return True


# ---------------------------------------------------------------------------
# maximality predicates


def is_maximal_k_antichain(fam: SetFamily, ks: KSpec) -> bool:
    """No single set with size in K can be added keeping the K-antichain property."""
    if not is_k_antichain(fam, ks):
        raise ValueError("family is not a K-antichain")
    masks = set(fam.masks())
    n = fam.ground
    for k in ks.levels:
        if k > n:
            continue
        for combo in combinations(range(n), k):
            s = 0
            for i in combo:
                s |= 1 << i
            if s in masks:
                continue
            if all(not _comparable(s, m) for m in masks):
                return False
    return True


def is_strongly_maximal(fam: SetFamily) -> bool:
    """No subset of [n] of any size can be added keeping the antichain property.

    For n <= 20 every size 1..n is tested directly; above that only sizes
    between the smallest and largest member size need testing (an addable
    set below/above that window yields an addable set inside it).
    """
    if not is_antichain(fam):
        return False
    n = fam.ground
    masks = set(fam.masks())
    if not masks:
        return n == 0
    if n <= 20:
        sizes = range(1, n + 1)
    else:
        cards = [m.bit_count() for m in masks]
        sizes = range(min(cards), max(cards) + 1)
    for k in sizes:
        for combo in combinations(range(n), k):
            s = 0
            for i in combo:
                s |= 1 << i
            if s in masks:
                continue
            if all(not _comparable(s, m) for m in masks):
                return False
    return True


def strong_maximality_criterion(g: Graph, ks: KSpec) -> bool:
    """Structural test: the canonical antichain of g is strongly maximal iff
    for all consecutive levels k_i < k_{i+1} of K, every clique of a size
    strictly between them either contains a k_i-clique extending to no
    k_{i+1}-clique, or itself extends to a k_{i+1}-clique.
    """
    levels = ks.levels
    for ki, ki1 in zip(levels, levels[1:]):
        for q in range(ki + 1, ki1):
            for b in k_cliques(g, q):
                if _extends_to(g, b.mask, ki1):
                    continue
                cond1 = False
                for combo in combinations(b.points(), ki):
                    sub = 0
                    for p in combo:
                        sub |= 1 << (p - 1)
                    if not _extends_to(g, sub, ki1):
                        cond1 = True
                        break
                if not cond1:
                    return False
    return True


# ---------------------------------------------------------------------------
# exact minimization over the antichains of a fixed graph


def _candidate_cliques(g: Graph, ks: KSpec) -> list[int]:
    cands: list[int] = []
    for k in ks.upper_levels():
        cands.extend(c.mask for c in k_cliques(g, k))
    cands.sort(key=lambda m: (m.bit_count(), m))
    return cands


def _min_cover(cands: list[int], initial: list[int]) -> tuple[int, list[int]]:
    """Minimum selection of candidate cliques that is pairwise incomparable
    and leaves every candidate comparable to a selected one.

    `initial` is a feasible selection used as the incumbent.  Returns
    (minimum size, one optimal selection as a sorted mask list).
    """
    m = len(cands)
    conflict = [0] * m  # strictly comparable candidates (and self)
    cover = [0] * m  # targets comparable to candidate i
    needs = [0] * m  # candidates comparable to target t
    for i, a in enumerate(cands):
        conflict[i] |= 1 << i
        for j in range(i + 1, m):
            b = cands[j]
            if _comparable(a, b):
                cover[i] |= 1 << j
                cover[j] |= 1 << i
                needs[i] |= 1 << j
                needs[j] |= 1 << i
                if a != b:
                    conflict[i] |= 1 << j
                    conflict[j] |= 1 << i
        cover[i] |= 1 << i
        needs[i] |= 1 << i

    allt = (1 << m) - 1
    best_size = len(initial)
    best_sol = sorted(initial)

    def dfs(count: int, uncovered: int, avail: int, chosen: list[int]) -> None:
        nonlocal best_size, best_sol
        if uncovered == 0:
            if count < best_size:
                best_size = count
                best_sol = sorted(cands[i] for i in chosen)
            return
        # greedy disjoint-target lower bound
        lb = 0
        used = 0
        rest = uncovered
        pivot = -1
        pivot_opts = 0
        pivot_n = 1 << 30
        while rest:
            lsb = rest & -rest
            t = lsb.bit_length() - 1
            rest ^= lsb
            opts = needs[t] & avail
            if opts == 0:
                return
            if opts & used == 0:
                lb += 1
                used |= opts
            c = opts.bit_count()
            if c < pivot_n:
                pivot_n = c
                pivot = t
                pivot_opts = opts
        if count + lb >= best_size:
            return
        # branch on the most constrained target; later branches exclude
        # earlier choices, partitioning by the lowest selected option
        banned = 0
        rest = pivot_opts
        while rest:
            lsb = rest & -rest
            i = lsb.bit_length() - 1
            rest ^= lsb
            chosen.append(i)
            dfs(count + 1, uncovered & ~cover[i], avail & ~(conflict[i] | banned), chosen)
            chosen.pop()
            banned |= 1 << i
        return

    dfs(0, allt, allt, [])
    return best_size, best_sol


def _cover_feasible(cands, conflict, cover, needs, prefix_idx, min_mask, budget) -> bool:
    """Can the prefix be completed (masks above min_mask only) within budget?"""
    m = len(cands)
    allt = (1 << m) - 1
    uncovered = allt
    avail = allt
    for i in prefix_idx:
        uncovered &= ~cover[i]
        avail &= ~conflict[i]
    for i, mask in enumerate(cands):
        if mask <= min_mask:
            avail &= ~(1 << i)

    def dfs(count: int, uncovered: int, avail: int) -> bool:
        if uncovered == 0:
            return True
        lb = 0
        used = 0
        rest = uncovered
        pivot_opts = 0
        pivot_n = 1 << 30
        while rest:
            lsb = rest & -rest
            t = lsb.bit_length() - 1
            rest ^= lsb
            opts = needs[t] & avail
            if opts == 0:
                return False
            if opts & used == 0:
                lb += 1
                used |= opts
            c = opts.bit_count()
            if c < pivot_n:
                pivot_n = c
                pivot_opts = opts
        if count + lb > budget:
            return False
        banned = 0
        rest = pivot_opts
        while rest:
            lsb = rest & -rest
            i = lsb.bit_length() - 1
            rest ^= lsb
            if dfs(count + 1, uncovered & ~cover[i], avail & ~(conflict[i] | banned)):
                return True
            banned |= 1 << i
        return False

    return dfs(len(prefix_idx), uncovered, avail)


_LEX_CAP = 80  # beyond this many candidate cliques, skip the lexicographic pass


def _lex_least_cover(cands: list[int], size: int) -> list[int] | None:
    """Lexicographically least optimal selection (by sorted mask tuples)."""
    if len(cands) > _LEX_CAP:
        return None
    m = len(cands)
    conflict = [0] * m
    cover = [0] * m
    needs = [0] * m
    for i, a in enumerate(cands):
        conflict[i] |= 1 << i
        for j in range(i + 1, m):
            b = cands[j]
            if _comparable(a, b):
                cover[i] |= 1 << j
                cover[j] |= 1 << i
                needs[i] |= 1 << j
                needs[j] |= 1 << i
                if a != b:
                    conflict[i] |= 1 << j
                    conflict[j] |= 1 << i
        cover[i] |= 1 << i
        needs[i] |= 1 << i
    order = sorted(range(m), key=lambda i: cands[i])
    prefix: list[int] = []
    last = -1
    while len(prefix) < size:
        advanced = False
        for i in order:
            if cands[i] <= last:
                continue
            if any(conflict[i] >> j & 1 for j in prefix):
                continue
            trial = prefix + [i]
            if _cover_feasible(cands, conflict, cover, needs, trial, cands[i], size):
                prefix = trial
                last = cands[i]
                advanced = True
                break
        if not advanced:
            return None
    return sorted(cands[i] for i in prefix)


def min_antichain_for_graph(g: Graph, ks: KSpec) -> tuple[AdmissibleAntichain, int]:
    """A minimum antichain among those sharing the graph g.

    Returns the antichain and its count of non-pair members (the minimized
    quantity; |E| minus it is the graph's objective value).  For two-level
    K the canonical antichain is the unique choice.  Ties are broken
    toward the lexicographically least selection (by sorted bit
    encodings) whenever the candidate clique count is at most 80.
    """
    canon = canonical_antichain(g, ks)  # also validates saturation
    if len(ks.levels) == 2:
        return canon, canon.nonpair_count()
    cands = _candidate_cliques(g, ks)
    initial = [m for k in ks.upper_levels() for m in canon.slices[k]]
    best_size, best_sol = _min_cover(cands, initial)
    lex = _lex_least_cover(cands, best_size)
    if lex is not None:
        best_sol = lex
    slices: dict[int, tuple[int, ...]] = {2: canon.slices[2]}
    for k in ks.upper_levels():
        slices[k] = tuple(sorted(m for m in best_sol if m.bit_count() == k))
    return AdmissibleAntichain(g, ks, slices), best_size


def min_nonpair_count(g: Graph, ks: KSpec) -> int:
    """Just the minimized non-pair member count (no lexicographic pass)."""
    canon = canonical_antichain(g, ks)
    if len(ks.levels) == 2:
        return canon.nonpair_count()
    cands = _candidate_cliques(g, ks)
    initial = [m for k in ks.upper_levels() for m in canon.slices[k]]
    best_size, _ = _min_cover(cands, initial)
    return best_size


def objective(g: Graph, adm: AdmissibleAntichain) -> int:
    """|E| minus the number of non-pair members; antichain size is C(n,2) - objective."""
    if adm.graph.n != g.n or adm.graph.rows != g.rows:
        raise ValueError("antichain belongs to a different graph")
    return g.edge_count() - adm.nonpair_count()


def enumerate_admissible(g: Graph, ks: KSpec, max_cliques: int = 20) -> list[tuple[int, ...]]:
    """All maximal K-antichains sharing g, as sorted tuples of non-pair masks.

    Brute-force oracle: recursively includes/excludes each candidate clique,
    keeping pairwise incomparability and pruning branches in which an
    excluded clique can no longer become comparable to anything.  Intended
    for test-scale graphs; refuses more than max_cliques candidates.
    """
    if not is_k_saturated(g, ks):
        raise ValueError(f"graph is not {ks}-saturated")
    cands = _candidate_cliques(g, ks)
    m = len(cands)
    if m > max_cliques:
        raise ValueError(f"{m} candidate cliques exceed the cap of {max_cliques}")
    needs = [0] * m
    conflict = [0] * m
    for i, a in enumerate(cands):
        needs[i] |= 1 << i
        for j in range(i + 1, m):
            if _comparable(a, cands[j]):
                needs[i] |= 1 << j
                needs[j] |= 1 << i
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    out: list[tuple[int, ...]] = []
    allmask = (1 << m) - 1

    def rec(i: int, chosen_mask: int, banned: int) -> None:
        # prune: every target must still be coverable by chosen or future picks
        future_live = allmask & ~banned & ~((1 << i) - 1)
        potential = chosen_mask | future_live
        for t in range(m):
            if not needs[t] & potential:
                return
        if i == m:
            masks = [cands[j] for j in range(m) if chosen_mask >> j & 1]
            out.append(tuple(sorted(masks)))
            return
        if not banned >> i & 1:
            rec(i + 1, chosen_mask | (1 << i), banned | conflict[i])
        rec(i + 1, chosen_mask, banned | (1 << i))

    rec(0, 0, 0)
    return out
