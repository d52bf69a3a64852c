"""Saturated-graph constructions with few cliques, and the closed-form
value functions they are measured against.

The general construction splits the vertices into a side A of
floor(l/2)-blocks, a side B of ceil(l/2)-blocks (l = largest admissible
level), joins the sides completely and leaves the remainder isolated.  For
l = 4 a sharper variant wires the leftover vertices into the graph; its
shape depends on n mod 4.  Objective values are always computed from the
explicit graphs (edge count minus a real clique count) rather than from
the displayed closed forms, which exist here only as verification targets.
"""

from __future__ import annotations

from .graph import Graph, count_k_cliques
from .setfam import KSpec


def _block_rows(n: int, a_blocks: list[list[int]], b_blocks: list[list[int]]) -> list[int]:
    """Rows for block cliques on two sides plus the complete A-B join."""
    rows = [0] * n
    mask_a = 0
    for blk in a_blocks:
        for v in blk:
            mask_a |= 1 << (v - 1)
    mask_b = 0
    for blk in b_blocks:
        for v in blk:
            mask_b |= 1 << (v - 1)
    for blocks, mine, other in ((a_blocks, mask_a, mask_b), (b_blocks, mask_b, mask_a)):
        for blk in blocks:
            bm = 0
            for v in blk:
                bm |= 1 << (v - 1)
            for v in blk:
                rows[v - 1] = (bm & ~(1 << (v - 1))) | other
    return rows


def general_graph(n: int, ks: KSpec) -> Graph:
    """The block construction for arbitrary K: A-side blocks of floor(l/2),
    B-side blocks of ceil(l/2), complete join between the sides, leftover
    vertices isolated.  Vertices 1..|A| form the A-blocks consecutively,
    then B, then the isolated rest.
    """
    l = ks.l
    if n < l:
        raise ValueError(f"need n >= {l} (largest level of K={ks})")
    fl, cl = l // 2, (l + 1) // 2
    size_a = (n // 2) // fl * fl
    size_b = ((n + 1) // 2) // cl * cl
    a_blocks = [list(range(i + 1, i + fl + 1)) for i in range(0, size_a, fl)]
    b_blocks = [list(range(size_a + i + 1, size_a + i + cl + 1)) for i in range(0, size_b, cl)]
    return Graph(n, tuple(_block_rows(n, a_blocks, b_blocks)))


def l4_graph(n: int) -> Graph:
    """The sharpened construction for largest level 4; the leftover vertex
    (n mod 4 in {1, 3}) is tied into the graph instead of isolated.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    m, r = divmod(n, 4)
    rows = [0] * n
    if r == 0:
        left = list(range(1, 2 * m + 1))
        right = list(range(2 * m + 1, 4 * m + 1))
        pairs = [(2 * i - 1, 2 * i) for i in range(1, 2 * m + 1)]
    elif r == 1:
        left = list(range(1, 2 * m + 1))
        right = list(range(2 * m + 1, 4 * m + 2))
        pairs = [(2 * i - 1, 2 * i) for i in range(1, 2 * m + 1)]
        pairs.append((4 * m, 4 * m + 1))
    elif r == 2:
        left = list(range(1, 2 * m + 1))
        right = list(range(2 * m + 1, 4 * m + 3))
        pairs = [(2 * i - 1, 2 * i) for i in range(1, 2 * m + 2)]
    else:
        left = list(range(1, 2 * m + 1)) + [4 * m + 3]
        right = list(range(2 * m + 1, 4 * m + 3))
        pairs = [(2 * i - 1, 2 * i) for i in range(1, 2 * m + 2)]
        pairs.append((2 * m, 4 * m + 3))
    lmask = 0
    for v in left:
        lmask |= 1 << (v - 1)
    rmask = 0
    for v in right:
        rmask |= 1 << (v - 1)
    for v in left:
        rows[v - 1] |= rmask
    for v in right:
        rows[v - 1] |= lmask
    for u, v in pairs:
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(rows))


def conjectured_max_objective(n: int) -> int:
    """Conjectured maximum of |E| - |C_4| over {2,4}-saturated graphs on n
    vertices: floor((3n^2+8n)/16) for even n, ceil((3n^2+6n)/16) for odd n.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if n % 2 == 0:
        return (3 * n * n + 8 * n) // 16
    return -((-(3 * n * n + 6 * n)) // 16)


def conjectured_min_antichain(n: int) -> int:
    """The same conjecture in antichain form: ceil((5n^2-16n)/16) for even n,
    floor((5n^2-14n)/16) for odd n.  Equals C(n,2) minus the objective form.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if n % 2 == 0:
        return -((-(5 * n * n - 16 * n)) // 16)
    return (5 * n * n - 14 * n) // 16


def construction_objective(n: int, l: int) -> int:
    """|E| - |C_l| of the constructed graph, counted on the explicit graph.

    Uses the sharpened graph for l = 4 and the general block construction
    otherwise.  This is deliberately not evaluated from the displayed
    closed forms; the clique count comes from enumeration.
    """
    if l < 3:
        raise ValueError("need l >= 3")
    if n < l:
        raise ValueError(f"need n >= l = {l}")
    g = l4_graph(n) if l == 4 else general_graph(n, KSpec.of((2, l)))
    return g.edge_count() - count_k_cliques(g, l)
