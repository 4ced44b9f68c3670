"""Compiled core of the degree-class branch-and-prune search.

The search decides one inter-class vertex pair at a time.  Vertices are
placed in a fixed order; a vertex decides its pairs with every earlier
vertex of another class, in placement order.  The state lives in arrays
owned by the caller, so a call can stop at a leaf or at the node budget
and be resumed later.
"""

from __future__ import annotations

import numpy as np
from numba import njit

STATUS_DONE = 0
STATUS_LEAF = 1
STATUS_BUDGET = 2


@njit(cache=True)
def _degrees_feasible(n, c, cls, cur, rem, same_prev, lo, hi, order_idx):
    for i in range(c):
        lo[i] = -1
        hi[i] = 1 << 30
    for v in range(n):
        i = cls[v]
        if cur[v] > lo[i]:
            lo[i] = cur[v]
        t = cur[v] + rem[v]
        if t < hi[i]:
            hi[i] = t
    for i in range(c):
        j = same_prev[i]
        if j >= 0 and lo[j] + 1 > lo[i]:
            lo[i] = lo[j] + 1
    for i in range(c - 1, -1, -1):
        j = same_prev[i]
        if j >= 0 and hi[i] - 1 < hi[j]:
            hi[j] = hi[i] - 1
    for i in range(c):
        if lo[i] > hi[i]:
            return False
    # distinct representatives for intervals: earliest deadline first
    for i in range(c):
        order_idx[i] = i
    for a in range(1, c):
        x = order_idx[a]
        b = a - 1
        while b >= 0 and (hi[order_idx[b]] > hi[x] or (hi[order_idx[b]] == hi[x] and lo[order_idx[b]] > lo[x])):
            order_idx[b + 1] = order_idx[b]
            b -= 1
        order_idx[b + 1] = x
    used = np.zeros(c, np.int64)
    for a in range(c):
        i = order_idx[a]
        best = 1 << 30
        # smallest unused value >= lo[i]
        val = lo[i]
        while True:
            clash = False
            for b in range(a):
                if used[b] == val:
                    clash = True
                    break
            if not clash:
                break
            val += 1
        best = val
        if best > hi[i]:
            return False
        used[a] = best
    return True


@njit(cache=True)
def _transversals_ok(v, u, cls, pos, rows, members, msize, c, table, toff, pair_index, chosen, cnt, idx):
    """Check every (partial) transversal through v and u whose other members precede u."""
    cv = cls[v]
    cu = cls[u]
    pu = pos[u]
    m = 0
    for ell in range(c):
        if ell == cv or ell == cu:
            cnt[ell] = -1
            continue
        k = 0
        for j in range(msize[ell]):
            if pos[members[ell, j]] < pu:
                k += 1
        cnt[ell] = k
        if k > 0:
            m += 1
    m += 2
    for ell in range(c):
        idx[ell] = 0
    while True:
        # assemble members in class-index order
        t = 0
        for ell in range(c):
            if ell == cv:
                chosen[t] = v
                t += 1
            elif ell == cu:
                chosen[t] = u
                t += 1
            elif cnt[ell] > 0:
                # idx-th member with position before u
                seen = -1
                for j in range(msize[ell]):
                    x = members[ell, j]
                    if pos[x] < pu:
                        seen += 1
                        if seen == idx[ell]:
                            chosen[t] = x
                            break
                t += 1
        code = 0
        for a in range(m):
            ra = rows[chosen[a]]
            for b in range(a + 1, m):
                if (ra >> chosen[b]) & 1:
                    code |= 1 << pair_index[a, b]
        if not table[toff[m] + code]:
            return False
        # odometer
        ell = c - 1
        while ell >= 0:
            if cnt[ell] > 0:
                idx[ell] += 1
                if idx[ell] < cnt[ell]:
                    break
                idx[ell] = 0
            ell -= 1
        if ell < 0:
            return True


@njit(cache=True)
def search(
    n, c, cls, pos, members, msize, var_v, var_u, var_first, twin_prev,
    same_prev, use_table, table, toff, pair_index,
    rows, cur, rem, val, eq, state, budget,
):
    """Advance the search.  ``state[0]`` is the current variable index.

    Returns (status, nodes used).  On STATUS_LEAF ``rows`` holds a complete
    assignment; calling again with ``state[0] = m - 1`` continues past it.
    """
    m = len(var_v)
    lo = np.zeros(c, np.int64)
    hi = np.zeros(c, np.int64)
    order_idx = np.zeros(c, np.int64)
    chosen = np.zeros(c, np.int64)
    cnt = np.zeros(c, np.int64)
    idx = np.zeros(c, np.int64)
    i = state[0]
    nodes = 0
    while True:
        if i >= m:
            state[0] = m
            return STATUS_LEAF, nodes
        if i < 0:
            state[0] = -1
            return STATUS_DONE, nodes
        if nodes >= budget:
            state[0] = i
            return STATUS_BUDGET, nodes
        v = var_v[i]
        u = var_u[i]
        # undo the current value
        if val[i] >= 0:
            if val[i] == 1:
                rows[v] &= ~(np.int64(1) << u)
                rows[u] &= ~(np.int64(1) << v)
                cur[v] -= 1
                cur[u] -= 1
            rem[v] += 1
            rem[u] += 1
        nxt = val[i] + 1
        if nxt > 1:
            val[i] = -1
            i -= 1
            continue
        val[i] = nxt
        rem[v] -= 1
        rem[u] -= 1
        if nxt == 1:
            rows[v] |= np.int64(1) << u
            rows[u] |= np.int64(1) << v
            cur[v] += 1
            cur[u] += 1
        nodes += 1
        # lexicographic order against the previous twin of v
        prev_eq = 1 if var_first[i] else eq[i - 1]
        eq[i] = prev_eq
        t = twin_prev[v]
        if t >= 0 and prev_eq == 1 and pos[u] < pos[t]:
            bt = (rows[t] >> u) & 1
            if nxt < bt:
                continue
            if nxt > bt:
                eq[i] = 0
        if not _degrees_feasible(n, c, cls, cur, rem, same_prev, lo, hi, order_idx):
            continue
        if use_table and not _transversals_ok(
            v, u, cls, pos, rows, members, msize, c, table, toff, pair_index, chosen, cnt, idx
        ):
            continue
        i += 1
