"""Compiled kernels for the enumeration hot loop.

These mirror the pure-Python reference implementations in enumeration.py
bit for bit (the test suite asserts equality of both paths on random and
exhaustive inputs); they exist only because the augmentation search runs
the canonical-labeling branch-and-bound hundreds of thousands of times.
Falls back to the Python path when numba is unavailable.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        return wrap(args[0]) if args and callable(args[0]) else wrap


AUT_CAP = 48
_INF = np.int64(1) << np.int64(62)
_ONE = np.int64(1)


@njit(cache=True)
def _bit_index(low):
    """Index of the single set bit in low (= low.bit_length() - 1)."""
    i = 0
    while low > 1:
        low >>= 1
        i += 1
    return i


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _min_order_core(n, adj, order_out, auts_out):
    """Iterative branch-and-bound for the minimal upper-triangle bit string.

    Fills order_out (position -> vertex) with the minimizing order and
    auts_out with up to AUT_CAP discovered automorphisms (vertex maps);
    returns the number of automorphisms recorded.  Mirrors the recursive
    reference implementation exactly.
    """
    if n == 1:
        order_out[0] = 0
        return 0
    best = np.full(n, _INF, np.int64)
    chosen = np.empty(n, np.int64)
    pattern = np.zeros((n, n), np.int64)
    remaining = np.empty(n, np.int64)
    improved = np.zeros(n, np.uint8)
    cands = np.empty((n, n), np.int64)
    ncand = np.zeros(n, np.int64)
    cursor = np.zeros(n, np.int64)
    orbit_stack = np.empty(n + 1, np.int64)
    have_best = False
    naut = 0
    full = (_ONE << n) - _ONE

    remaining[0] = full
    level = 0
    entering = True
    while level >= 0:
        if entering:
            entering = False
            m = _INF
            cnt = 0
            r = remaining[level]
            while r:
                low = r & -r
                u = _bit_index(low)
                r ^= low
                p = pattern[level, u]
                if p < m:
                    m = p
                    cands[level, 0] = u
                    cnt = 1
                elif p == m:
                    cands[level, cnt] = u
                    cnt += 1
            if m > best[level]:
                level -= 1
                continue
            if m < best[level]:
                best[level] = m
                for i in range(level + 1, n):
                    best[i] = _INF
                improved[level] = 1
            if cnt > 1:
                # twin vertices are swappable by an automorphism: keep one
                keep = 0
                for idx in range(cnt):
                    u = cands[level, idx]
                    au = adj[u]
                    dup = -1
                    for jdx in range(keep):
                        v = cands[level, jdx]
                        if au & ~(_ONE << v) == adj[v] & ~(_ONE << u):
                            dup = v
                            break
                    if dup >= 0:
                        if naut < AUT_CAP:
                            fresh = True
                            for t in range(naut):
                                same = True
                                for w in range(n):
                                    expect = w
                                    if w == u:
                                        expect = dup
                                    elif w == dup:
                                        expect = u
                                    if auts_out[t, w] != expect:
                                        same = False
                                        break
                                if same:
                                    fresh = False
                                    break
                            if fresh:
                                for w in range(n):
                                    auts_out[naut, w] = w
                                auts_out[naut, u] = dup
                                auts_out[naut, dup] = u
                                naut += 1
                    else:
                        cands[level, keep] = u
                        keep += 1
                cnt = keep
            if cnt > 1 and naut > 0:
                # candidates in one orbit of prefix-fixing automorphisms
                # reach the same subtree minimum: explore one per orbit
                dropped = np.int64(0)
                keep = 0
                for idx in range(cnt):
                    u = cands[level, idx]
                    if dropped >> u & 1:
                        continue
                    cands[level, keep] = u
                    keep += 1
                    orbit = _ONE << u
                    sp = 0
                    orbit_stack[sp] = u
                    sp += 1
                    while sp > 0:
                        sp -= 1
                        x = orbit_stack[sp]
                        for t in range(naut):
                            fixes = True
                            for i in range(level):
                                c = chosen[i]
                                if auts_out[t, c] != c:
                                    fixes = False
                                    break
                            if not fixes:
                                continue
                            y = auts_out[t, x]
                            if not (orbit >> y & 1):
                                orbit |= _ONE << y
                                orbit_stack[sp] = y
                                sp += 1
                    dropped |= orbit
                cnt = keep
            ncand[level] = cnt
            cursor[level] = 0
        if cursor[level] >= ncand[level]:
            level -= 1
            continue
        u = cands[level, cursor[level]]
        cursor[level] += 1
        chosen[level] = u
        if level == n - 1:
            if have_best and improved[level] == 0 and naut < AUT_CAP:
                identity = True
                for i in range(n):
                    if chosen[i] != order_out[i]:
                        identity = False
                        break
                if not identity:
                    fresh = True
                    for t in range(naut):
                        same = True
                        for i in range(n):
                            if auts_out[t, chosen[i]] != order_out[i]:
                                same = False
                                break
                        if same:
                            fresh = False
                            break
                    if fresh:
                        for i in range(n):
                            auts_out[naut, chosen[i]] = order_out[i]
                        naut += 1
            for i in range(n):
                order_out[i] = chosen[i]
            have_best = True
            continue
        rest = remaining[level] ^ (_ONE << u)
        au = adj[u]
        nxt = level + 1
        r = rest
        while r:
            low = r & -r
            w = _bit_index(low)
            r ^= low
            pattern[nxt, w] = pattern[level, w] << 1 | (au >> w & 1)
        remaining[nxt] = rest
        improved[nxt] = improved[level]
        level = nxt
        entering = True
    return naut


@njit(cache=True)
def _forest_on(rows, mask):
    """Acyclicity of the subgraph induced on the vertex mask (union-find)."""
    parent = np.empty(64, np.int64)
    r = mask
    while r:
        low = r & -r
        v = _bit_index(low)
        parent[v] = v
        r ^= low
    r = mask
    while r:
        low = r & -r
        v = _bit_index(low)
        r ^= low
        nbrs = rows[v] & mask
        while nbrs:
            l2 = nbrs & -nbrs
            u = _bit_index(l2)
            nbrs ^= l2
            if u >= v:
                break
            ru = u
            while parent[ru] != ru:
                parent[ru] = parent[parent[ru]]
                ru = parent[ru]
            rv = v
            while parent[rv] != rv:
                parent[rv] = parent[parent[rv]]
                rv = parent[rv]
            if ru == rv:
                return False
            parent[ru] = rv
    return True


@njit(cache=True)
def _wheel_free_child(rows, n, mask):
    """Wheel check for a child of a wheel-free parent: only neighborhoods
    touched by the new vertex can have gained a cycle."""
    if _popcount(mask) >= 3 and not _forest_on(rows, mask):
        return False
    m = mask
    while m:
        low = m & -m
        v = _bit_index(low)
        m ^= low
        nb = rows[v]
        if _popcount(nb) >= 3 and not _forest_on(rows, nb):
            return False
    return True


@njit(cache=True)
def _expand_parent_core(n, parent_rows, gens, start_mask, check_wheel, out):
    """All augmentations of one parent: one neighborhood mask per orbit of
    the parent automorphisms, wheel-filtered, canonically relabeled into
    out rows.  Returns the number of children written."""
    top = _ONE << (n - 1)
    ngens = gens.shape[0]
    seen = np.zeros((int(top) + 63) // 64, np.int64)
    stack = np.empty(int(top), np.int64)
    rows = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    pos = np.empty(n, np.int64)
    auts_scratch = np.empty((AUT_CAP, n), np.int64)
    count = 0
    for mask in range(start_mask, top):
        if seen[mask >> 6] >> (mask & 63) & 1:
            continue
        if ngens > 0:
            seen[mask >> 6] |= _ONE << (mask & 63)
            sp = 0
            stack[sp] = mask
            sp += 1
            while sp > 0:
                sp -= 1
                x = stack[sp]
                for gi in range(ngens):
                    y = np.int64(0)
                    xx = x
                    while xx:
                        low = xx & -xx
                        y |= _ONE << gens[gi, _bit_index(low)]
                        xx ^= low
                    if not (seen[y >> 6] >> (y & 63) & 1):
                        seen[y >> 6] |= _ONE << (y & 63)
                        stack[sp] = y
                        sp += 1
        topbit = _ONE << (n - 1)
        for v in range(n - 1):
            if mask >> v & 1:
                rows[v] = parent_rows[v] | topbit
            else:
                rows[v] = parent_rows[v]
        rows[n - 1] = np.int64(mask)
        if check_wheel and not _wheel_free_child(rows, n, np.int64(mask)):
            continue
        _min_order_core(n, rows, order, auts_scratch)
        for p in range(n):
            pos[order[p]] = p
        for old in range(n):
            nr = np.int64(0)
            row = rows[old]
            while row:
                low = row & -row
                nr |= _ONE << pos[_bit_index(low)]
                row ^= low
            out[count, pos[old]] = nr
        count += 1
    return count


def min_order_fast(n: int, adj) -> tuple[list[int], list[tuple[int, ...]]]:
    """Wrapper matching the reference _min_order signature."""
    adj_arr = np.asarray(adj, dtype=np.int64)
    order = np.empty(n, np.int64)
    auts = np.empty((AUT_CAP, n), np.int64)
    naut = _min_order_core(n, adj_arr, order, auts)
    return [int(x) for x in order], [tuple(int(x) for x in auts[t])
                                     for t in range(naut)]


def expand_parent_fast(n: int, parent_rows, gens, start_mask: int,
                       check_wheel: bool, out: np.ndarray) -> int:
    parent_arr = np.asarray(parent_rows, dtype=np.int64)
    if gens:
        gens_arr = np.asarray(gens, dtype=np.int64)
    else:
        gens_arr = np.empty((0, n - 1), dtype=np.int64)
    return int(_expand_parent_core(n, parent_arr, gens_arr,
                                   np.int64(start_mask), check_wheel, out))
