"""Bit-row graph kernel: construction, clique enumeration and counting,
triangle counts, DOT/JSON export.

A simple undirected graph on vertices 1..n is stored as n adjacency
bitmasks; bit j-1 of rows[i-1] is set iff ij is an edge.  Rows are plain
Python ints, so large vertex counts (10^4 and beyond) work; full symmetry
validation is only run automatically on small graphs, the dedicated
constructors guarantee it by construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .setfam import PointSet, SetFamily, bits_of

_VALIDATE_LIMIT = 256  # full symmetry check only below this vertex count


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 1..n as adjacency bit rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("graphs need at least 2 vertices")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {i + 1} has bits outside [1, {self.n}]")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i + 1}")
        if self.n <= _VALIDATE_LIMIT:
            for i in range(self.n):
                for j in bits_of(self.rows[i]):
                    if not self.rows[j - 1] >> i & 1:
                        raise ValueError(f"asymmetric adjacency between {i + 1} and {j}")

    def row(self, v: int) -> int:
        """Neighbourhood of vertex v as a bitmask."""
        return self.rows[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u - 1] >> (v - 1) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v - 1].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(1, self.n + 1):
            row = self.rows[u - 1] >> u  # neighbours above u
            for j in bits_of(row):
                out.append((u, u + j))
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops are errors."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) outside vertex range [1, {n}]")
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(rows))


def edge_count(g: Graph) -> int:
    return g.edge_count()


def _as_mask(g: Graph, s: PointSet | Iterable[int]) -> int:
    if isinstance(s, PointSet):
        mask = s.mask
    else:
        mask = 0
        for p in s:
            mask |= 1 << (p - 1)
    if mask < 0 or mask >> g.n:
        raise ValueError(f"vertex set has points outside [1, {g.n}]")
    return mask


def is_clique(g: Graph, s: PointSet | Iterable[int]) -> bool:
    """True iff all pairs inside s are edges; |s| <= 1 counts as a clique."""
    mask = _as_mask(g, s)
    rest = mask
    while rest:
        lsb = rest & -rest
        v = lsb.bit_length()
        rest ^= lsb
        if rest & ~g.rows[v - 1]:
            return False
    return True


def _iter_clique_masks(g: Graph, k: int):
    """Recursive candidate-intersection enumeration of k-clique masks."""
    rows = g.rows
    n = g.n
    full = (1 << n) - 1

    def extend(mask: int, cand: int, depth: int):
        if depth == k:
            yield mask
            return
        rest = cand
        while rest:
            lsb = rest & -rest
            v = lsb.bit_length()
            rest ^= lsb
            yield from extend(mask | lsb, cand & rows[v - 1] & (full << v), depth + 1)

    yield from extend(0, full, 0)


def k_cliques(g: Graph, k: int) -> list[PointSet]:
    """All vertex sets of size k inducing complete subgraphs.

    Returned in ascending order of bit encoding (deterministic canonical
    order).  k must be >= 2; k above n yields the empty list.
    """
    if k < 2:
        raise ValueError("k_cliques needs k >= 2")
    if k > g.n:
        return []
    masks = sorted(_iter_clique_masks(g, k))
    return [PointSet(m, g.n) for m in masks]


def count_k_cliques(g: Graph, k: int, engine: str = "auto") -> int:
    """Number of k-cliques.

    engine: "auto" picks the pure-Python path for small graphs and the
    compiled counting kernel for large ones; "python" and "fast" force a
    path (used to cross-validate the two).
    """
    if k < 2:
        raise ValueError("count_k_cliques needs k >= 2")
    if k > g.n:
        return 0
    if k == 2:
        return g.edge_count()
    if engine not in ("auto", "python", "fast"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "python" or (engine == "auto" and g.n <= 128):
        return sum(1 for _ in _iter_clique_masks(g, k))
    from . import _kernels

    return _kernels.count_cliques(g, k)


def triangle_count(g: Graph) -> int:
    """Number of 3-cliques."""
    if g.n < 3:
        return 0
    return count_k_cliques(g, 3)


def nonedges(g: Graph) -> SetFamily:
    """All non-adjacent unordered pairs as 2-sets, ascending bit encoding."""
    masks = []
    full = (1 << g.n) - 1
    for u in range(1, g.n + 1):
        non = ~g.rows[u - 1] & (full >> u << u)  # non-neighbours above u
        for v in bits_of(non):
            masks.append((1 << (u - 1)) | (1 << (v - 1)))
    return SetFamily.from_masks(sorted(masks), g.n)


def to_dot(g: Graph) -> str:
    """Deterministic DOT export: vertices 1..n, then edges in lexicographic order."""
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(1, g.n + 1)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError('graph JSON must be {"n": int, "edges": [[u, v], ...]}')
    return from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def naive_k_cliques(g: Graph, k: int) -> list[PointSet]:
    """Oracle enumeration: test all C(n, k) subsets directly.  Test use only."""
    out = []
    for combo in combinations(range(1, g.n + 1), k):
        if is_clique(g, combo):
            out.append(PointSet.of(combo, g.n))
    return sorted(out, key=lambda s: s.mask)
