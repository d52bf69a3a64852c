"""Compiled inner loops (numba).

Two jobs live here:

* counting k-cliques on packed uint64 adjacency rows, used by the
  construction-objective sweeps where n reaches 10^4 and pure Python is
  hopeless;
* the exhaustive-search scans over all 2^C(n,2) adjacency encodings for
  n <= 8, for K = {2,3}, {2,4} and {2,3,4}.

Everything is deterministic: kernels take explicit encoding ranges and the
caller merges (max objective, then least encoding).  The {2,3,4} scan
resolves sparse graphs exactly in-kernel (their canonical antichain is a
minimum) and returns the rare non-sparse "suspects" for the exact
branch-and-bound on the Python side.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U0 = np.uint64(0)
U1 = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_FULL = np.uint64(0xFFFFFFFFFFFFFFFF)

_LISTCAP = 96


@njit(cache=True, nogil=True, inline="always")
def _pop64(x):
    x = x - ((x >> U1) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True, nogil=True, inline="always")
def _popsmall(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, nogil=True, inline="always")
def _tz_small(x):
    c = 0
    while not (x >> c) & 1:
        c += 1
    return c


@njit(cache=True, nogil=True)
def _build_above(n):
    """above[v]: packed mask of vertices with index > v (0-based)."""
    W = (n + 63) // 64
    ab = np.zeros((n, W), np.uint64)
    for v in range(n):
        for w in range(W):
            lo = w * 64
            x = _FULL
            if lo + 64 > n:
                if n - lo <= 0:
                    x = U0
                else:
                    x = (U1 << np.uint64(n - lo)) - U1
            if lo <= v:
                shift = v + 1 - lo
                if shift >= 64:
                    x = U0
                else:
                    x = x & (_FULL << np.uint64(shift))
            ab[v, w] = x
    return ab


@njit(cache=True, nogil=True)
def _count_cliques_packed(rows, above, n, k):
    """Count k-cliques (k >= 2) by DFS over candidate intersections.

    Candidate sets switch from packed masks to short vertex lists once they
    fit _LISTCAP entries; at depth k-1 only a fused popcount is taken.
    """
    W = rows.shape[1]
    total = np.int64(0)
    cmask = np.zeros((k + 1, W), np.uint64)
    clist = np.zeros((k + 1, _LISTCAP), np.int32)
    clen = np.zeros(k + 1, np.int64)
    ismask = np.zeros(k + 1, np.uint8)
    cw = np.zeros(k + 1, np.int64)
    cb = np.zeros(k + 1, np.uint64)
    ci = np.zeros(k + 1, np.int64)

    for v0 in range(n):
        cnt = np.int64(0)
        for w in range(W):
            x = rows[v0, w] & above[v0, w]
            cmask[1, w] = x
            cnt += _pop64(x)
        if cnt == 0:
            continue
        if k - 1 == 1:
            total += cnt
            continue
        d = 1
        ismask[1] = 1
        cw[1] = 0
        cb[1] = cmask[1, 0]
        while d >= 1:
            # pull the next candidate vertex at depth d
            v = np.int64(-1)
            if ismask[d] == 1:
                while True:
                    if cb[d] != U0:
                        lsb = cb[d] & (U0 - cb[d])
                        cb[d] = cb[d] ^ lsb
                        v = cw[d] * 64 + _pop64(lsb - U1)
                        break
                    cw[d] += 1
                    if cw[d] >= W:
                        break
                    cb[d] = cmask[d, cw[d]]
            else:
                if ci[d] < clen[d]:
                    v = np.int64(clist[d, ci[d]])
                    ci[d] += 1
            if v < 0:
                d -= 1
                continue
            nd = d + 1
            if nd == k - 1:
                c2 = np.int64(0)
                if ismask[d] == 1:
                    for w in range(W):
                        c2 += _pop64(cmask[d, w] & rows[v, w] & above[v, w])
                else:
                    for i in range(clen[d]):
                        u = np.int64(clist[d, i])
                        if u > v and (rows[v, u >> 6] >> np.uint64(u & 63)) & U1:
                            c2 += 1
                total += c2
                continue
            # materialize child candidates
            if ismask[d] == 1:
                cnt2 = np.int64(0)
                for w in range(W):
                    x = cmask[d, w] & rows[v, w] & above[v, w]
                    cmask[nd, w] = x
                    cnt2 += _pop64(x)
                if cnt2 == 0:
                    continue
                if cnt2 <= _LISTCAP:
                    m = 0
                    for w in range(W):
                        x = cmask[nd, w]
                        while x != U0:
                            lsb = x & (U0 - x)
                            x = x ^ lsb
                            clist[nd, m] = np.int32(w * 64 + _pop64(lsb - U1))
                            m += 1
                    clen[nd] = m
                    ismask[nd] = 0
                    ci[nd] = 0
                else:
                    ismask[nd] = 1
                    cw[nd] = 0
                    cb[nd] = cmask[nd, 0]
            else:
                m = 0
                for i in range(clen[d]):
                    u = np.int64(clist[d, i])
                    if u > v and (rows[v, u >> 6] >> np.uint64(u & 63)) & U1:
                        clist[nd, m] = np.int32(u)
                        m += 1
                if m == 0:
                    continue
                clen[nd] = m
                ismask[nd] = 0
                ci[nd] = 0
            d = nd
    return total


def _pack_rows(g) -> np.ndarray:
    W = (g.n + 63) // 64
    arr = np.zeros((g.n, W), np.uint64)
    for i, row in enumerate(g.rows):
        if row:
            arr[i] = np.frombuffer(row.to_bytes(W * 8, "little"), dtype="<u8")
    return arr


def count_cliques(g, k: int) -> int:
    """k-clique count via the packed kernel (k >= 2)."""
    if k > g.n:
        return 0
    if k == 2:
        return g.edge_count()
    rows = _pack_rows(g)
    above = _build_above(g.n)
    return int(_count_cliques_packed(rows, above, g.n, k))


# ---------------------------------------------------------------------------
# exhaustive search scans (n <= 8; everything fits in int64 masks)


@njit(cache=True, nogil=True)
def _scan_pair_level(n, us, vs, start, stop, kk, seed, prune, symcut):
    """Scan encodings for K = {2, kk} (kk in {3, 4}).

    Objective per K-saturated graph is |E| minus the kk-clique count (the
    antichain is forced).  Returns (best, best_enc, emask) where emask has
    bit e set iff some optimal graph has e edges (profiles are (C(n,2)-e,
    e-best)).  best = -1 if the range holds no evaluated saturated graph.
    """
    best = np.int64(-1)
    bestenc = np.int64(-1)
    emask = np.int64(0)
    above = np.zeros(n, np.int64)
    full = (np.int64(1) << n) - 1
    for v in range(n):
        above[v] = full & ~((np.int64(1) << (v + 1)) - 1)
    rows = np.zeros(n, np.int64)

    for enc in range(start, stop):
        e = _popsmall(enc)
        incumbent = best if best > seed else seed
        if prune and (e == 0 or e - 1 < incumbent):
            continue
        for v in range(n):
            rows[v] = 0
        t = np.int64(enc)
        while t:
            s = _tz_small(t)
            t &= t - 1
            rows[us[s]] |= np.int64(1) << vs[s]
            rows[vs[s]] |= np.int64(1) << us[s]
        if symcut:
            d0 = _popsmall(rows[0])
            ok = True
            for v in range(1, n):
                if _popsmall(rows[v]) > d0:
                    ok = False
                    break
            if not ok:
                continue
        sat = True
        cnt = np.int64(0)
        t = np.int64(enc)
        while t:
            s = _tz_small(t)
            t &= t - 1
            u = us[s]
            v = vs[s]
            common = rows[u] & rows[v]
            if kk == 3:
                if common == 0:
                    sat = False
                    break
                cnt += _popsmall(common & above[v])
            else:
                cov = False
                c = common
                while c:
                    w = _tz_small(c)
                    c &= c - 1
                    if rows[w] & common:
                        cov = True
                        break
                if not cov:
                    sat = False
                    break
                c = common & above[v]
                while c:
                    w = _tz_small(c)
                    c &= c - 1
                    cnt += _popsmall(common & rows[w] & above[w])
        if not sat:
            continue
        obj = e - cnt
        if obj > best:
            best = obj
            bestenc = enc
            emask = np.int64(1) << e
        elif obj == best:
            emask |= np.int64(1) << e
            if enc < bestenc:
                bestenc = enc
    return best, bestenc, emask


@njit(cache=True, nogil=True)
def _lp_lower_bound(e, t3, q4, c3, n):
    """Integer lower bound on m3 + m4 over admissible antichains for {2,3,4}.

    Constraints: members cover all edges (3 or 6 per member), all triangles
    (1 per triple, 4 per 4-set), all 4-cliques (n-3 per triple, 1 per
    4-set); triangles outside 4-cliques are forced into the antichain.
    """
    best = np.int64(1 << 30)
    for m4 in range(q4 + 1):
        m3 = np.int64(c3)
        r = t3 - 4 * m4
        if r > m3:
            m3 = r
        r = e - 6 * m4
        if r > 0:
            r = (r + 2) // 3
            if r > m3:
                m3 = r
        r = q4 - m4
        if r > 0:
            r = (r + n - 4) // (n - 3)
            if r > m3:
                m3 = r
        s = m3 + m4
        if s < best:
            best = s
        if m3 == c3:
            break  # further m4 only raises the total
    return best


@njit(cache=True, nogil=True)
def _scan_234(n, us, vs, start, stop, seed, prune, symcut, suspects, profs):
    """Scan encodings for K = {2,3,4}.

    Sparse saturated graphs are resolved exactly (canonical value); for
    non-sparse graphs that could still reach `seed` the encoding goes to
    `suspects`.  Returns (best, best_enc, n_suspects, n_profiles,
    prof_overflow); profiles of best-attaining resolved graphs are packed
    p2 | c3 << 6 | q4 << 13.
    """
    nslots = len(us)
    best = np.int64(-1)
    bestenc = np.int64(-1)
    nsus = 0
    nprof = 0
    prof_overflow = False
    above = np.zeros(n, np.int64)
    full = (np.int64(1) << n) - 1
    for v in range(n):
        above[v] = full & ~((np.int64(1) << (v + 1)) - 1)
    rows = np.zeros(n, np.int64)
    profcap = len(profs)

    for enc in range(start, stop):
        e = _popsmall(enc)
        if prune and e - (e + 5) // 6 < seed:
            continue
        for v in range(n):
            rows[v] = 0
        t = np.int64(enc)
        while t:
            s = _tz_small(t)
            t &= t - 1
            rows[us[s]] |= np.int64(1) << vs[s]
            rows[vs[s]] |= np.int64(1) << us[s]
        if symcut:
            d0 = _popsmall(rows[0])
            ok = True
            for v in range(1, n):
                if _popsmall(rows[v]) > d0:
                    ok = False
                    break
            if not ok:
                continue
        sat = True
        t3 = np.int64(0)
        q4 = np.int64(0)
        c3 = np.int64(0)
        sparse = True
        t = np.int64(enc)
        while t:
            s = _tz_small(t)
            t &= t - 1
            u = us[s]
            v = vs[s]
            common = rows[u] & rows[v]
            if common == 0:
                sat = False
                break
            c = common & above[v]
            while c:
                w = _tz_small(c)
                c &= c - 1
                cm3 = common & rows[w]
                if cm3 == 0:
                    c3 += 1
                t3 += 1
                x = cm3 & above[w]
                while x:
                    y = _tz_small(x)
                    x &= x - 1
                    q4 += 1
                    if sparse:
                        # the 4-clique needs a triple extending nowhere else
                        if (
                            _popsmall(rows[u] & rows[v] & rows[w]) != 1
                            and _popsmall(rows[u] & rows[v] & rows[y]) != 1
                            and _popsmall(rows[u] & rows[w] & rows[y]) != 1
                            and _popsmall(rows[v] & rows[w] & rows[y]) != 1
                        ):
                            sparse = False
        if not sat:
            continue
        val = e - (c3 + q4)  # canonical antichain value, always achievable
        p = np.int64(nslots - e) | (c3 << 6) | (q4 << 13)
        if val > best:
            best = val
            bestenc = enc
            profs[0] = p
            nprof = 1
        elif val == best:
            if enc < bestenc:
                bestenc = enc
            found = False
            for i in range(nprof):
                if profs[i] == p:
                    found = True
                    break
            if not found:
                if nprof < profcap:
                    profs[nprof] = p
                    nprof += 1
                else:
                    prof_overflow = True
        if not sparse:
            lb = _lp_lower_bound(e, t3, q4, c3, n)
            if c3 + q4 > lb and e - lb >= seed:
                suspects[nsus] = enc
                nsus += 1
    return best, bestenc, nsus, nprof, prof_overflow
