import itertools
import random

import pytest

from antichains import (
    Graph,
    KSpec,
    SetFamily,
    from_edges,
    nonedges,
    parse_family,
)

# The nine-point family: a maximal {2,4}-antichain that is not maximal as a
# {2,3,4}-antichain (the triple 123 can be added).
NINE_POINT_TEXT = "1245,2367,1389,16,17,28,29,34,35,46,47,48,49,56,57,58,59,68,69,78,79"

# The ten-point optimum: five 4-sets meeting pairwise in one point; the
# graph is 6-regular with every edge in exactly one 4-clique.
WITNESS10_CLIQUES = "1234,1567,2589,368a,479a"


@pytest.fixture(scope="session")
def nine_point_family() -> SetFamily:
    return parse_family(NINE_POINT_TEXT, 9)


@pytest.fixture(scope="session")
def witness10() -> tuple[Graph, SetFamily]:
    fam4 = parse_family(WITNESS10_CLIQUES, 10)
    edges = set()
    for c in fam4:
        for u, v in itertools.combinations(c.points(), 2):
            edges.add((u, v))
    g = from_edges(10, sorted(edges))
    full = SetFamily.from_masks(list(nonedges(g).masks()) + list(fam4.masks()), 10)
    return g, full


def random_family(rng: random.Random, n_max: int = 8, m_max: int = 6) -> SetFamily:
    """Random family of distinct nonempty subsets."""
    n = rng.randint(2, n_max)
    m = rng.randint(0, m_max)
    seen = set()
    sets = []
    for _ in range(m):
        k = rng.randint(1, n)
        s = tuple(sorted(rng.sample(range(1, n + 1), k)))
        if s in seen:
            continue
        seen.add(s)
        sets.append(s)
    return SetFamily.of(sets, n)


def random_saturated_graph(n: int, ks: KSpec, rng: random.Random) -> Graph:
    """Random graph repaired to K-saturation: repeatedly drop edges that lie
    in no kstar-clique until none remain (possibly ending empty)."""
    need = ks.kstar - 2  # extra vertices a supporting clique must contribute
    assert need in (1, 2), "repair loop handles kstar in {3, 4}"
    p = rng.uniform(0.4, 0.9)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    while True:
        drop = []
        for u in range(n):
            for v in range(u + 1, n):
                if not rows[u] >> v & 1:
                    continue
                common = rows[u] & rows[v]
                if need == 1:
                    ok = common != 0
                else:
                    ok = False
                    t = common
                    while t:
                        w = (t & -t).bit_length() - 1
                        t &= t - 1
                        if rows[w] & common & ~(1 << w):
                            ok = True
                            break
                if not ok:
                    drop.append((u, v))
        if not drop:
            return Graph(n, tuple(rows))
        for u, v in drop:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
