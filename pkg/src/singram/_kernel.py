"""Compiled kernels for small graphs (order at most 62, rows as int64 masks).

The pure-Python modules stay the reference implementation; these kernels
exist because exhaustive sweeps at orders 9 and 10 touch millions of graphs.
Everything here is deterministic and single-threaded.
"""

from __future__ import annotations

import numpy as np
from numba import njit

KERNEL_MAX_ORDER = 16
MAX_GENS = 1024

MODE_COLLECT = 0
MODE_RGRAPHS = 1
MODE_SR_SWEEP = 2
MODE_TS_SWEEP = 3

EMBED_PLAIN = 0
EMBED_EQUAL = 1
EMBED_GAPPED = 2


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _uf_find(uf, x):
    while uf[x] != x:
        uf[x] = uf[uf[x]]
        x = uf[x]
    return x


@njit(cache=True)
def _uf_union(uf, a, b):
    ra = _uf_find(uf, a)
    rb = _uf_find(uf, b)
    if ra < rb:
        uf[rb] = ra
    elif rb < ra:
        uf[ra] = rb


@njit(cache=True)
def _refine(adj, n, lab, ptn, start_cell, queue, inq, cnt):
    """Refine the ordered partition (lab, ptn) to an equitable one.

    ptn[i] == 1 means positions i and i+1 share a cell.  start_cell < 0
    queues every cell as a splitter.
    """
    head = 0
    size = 0
    for i in range(n):
        inq[i] = False
    if start_cell < 0:
        i = 0
        while i < n:
            queue[(head + size) % n] = i
            size += 1
            inq[i] = True
            while ptn[i]:
                i += 1
            i += 1
    else:
        queue[0] = start_cell
        size = 1
        inq[start_cell] = True
    while size > 0:
        s = queue[head]
        head = (head + 1) % n
        size -= 1
        inq[s] = False
        e = s
        while ptn[e]:
            e += 1
        w = 0
        for t in range(s, e + 1):
            w |= np.int64(1) << lab[t]
        i = 0
        while i < n:
            j = i
            while ptn[j]:
                j += 1
            if j > i:
                same = True
                for t in range(i, j + 1):
                    cnt[t] = popcount(adj[lab[t]] & w)
                    if cnt[t] != cnt[i]:
                        same = False
                if not same:
                    for t in range(i + 1, j + 1):
                        c = cnt[t]
                        v = lab[t]
                        u = t - 1
                        while u >= i and cnt[u] > c:
                            cnt[u + 1] = cnt[u]
                            lab[u + 1] = lab[u]
                            u -= 1
                        cnt[u + 1] = c
                        lab[u + 1] = v
                    for t in range(i, j):
                        ptn[t] = 1 if cnt[t] == cnt[t + 1] else 0
                    f = i
                    while f <= j:
                        if not inq[f]:
                            queue[(head + size) % n] = f
                            size += 1
                            inq[f] = True
                        g = f
                        while ptn[g]:
                            g += 1
                        f = g + 1
            i = j + 1


@njit(cache=True)
def canon(adj, n):
    """Canonical labelling of the graph with rows ``adj``.

    Returns (lab, orbits, gens, ngens, overflow): lab[i] is the vertex at
    canonical position i, orbits[v] the least vertex of v's orbit, and the
    first ngens rows of gens generate the automorphism group.
    """
    lab_st = np.empty((n + 1, n), np.int64)
    ptn_st = np.zeros((n + 1, n), np.int8)
    tcs = np.zeros(n + 1, np.int64)
    tce = np.zeros(n + 1, np.int64)
    nxt = np.zeros(n + 1, np.int64)
    expl = np.zeros((n + 1, n), np.int64)
    nexpl = np.zeros(n + 1, np.int64)
    prefix = np.zeros(n + 1, np.int64)
    queue = np.empty(n, np.int64)
    inq = np.zeros(n, np.bool_)
    cnt = np.empty(n, np.int64)
    gens = np.empty((MAX_GENS, n), np.int64)
    ngens = 0
    overflow = False
    orb = np.arange(n)
    tmp_uf = np.arange(n)
    best = np.empty(n, np.int64)
    cur = np.empty(n, np.int64)
    pos = np.empty(n, np.int64)
    bestlab = np.arange(n)
    have_best = False
    twin_seen = np.zeros((n, n), np.bool_)

    for i in range(n):
        lab_st[0, i] = i
        ptn_st[0, i] = 1
    if n > 0:
        ptn_st[0, n - 1] = 0
        _refine(adj, n, lab_st[0], ptn_st[0], 0, queue, inq, cnt)

    level = 0
    # is the root discrete?
    discrete = True
    for i in range(n - 1):
        if ptn_st[0, i]:
            discrete = False
            break
    if discrete:
        for i in range(n):
            bestlab[i] = lab_st[0, i]
        return bestlab, orb, gens, 0, False
    # target cell at root
    for i in range(n - 1):
        if ptn_st[0, i]:
            tcs[0] = i
            break
    e = tcs[0]
    while ptn_st[0, e]:
        e += 1
    tce[0] = e
    nxt[0] = tcs[0]
    nexpl[0] = 0

    while level >= 0:
        found = -1
        while nxt[level] <= tce[level]:
            p = nxt[level]
            nxt[level] += 1
            w = lab_st[level, p]
            pruned = False
            for a in range(nexpl[level]):
                u = expl[level, a]
                bw = np.int64(1) << w
                bu = np.int64(1) << u
                if (adj[u] & ~bw) == (adj[w] & ~bu):
                    pruned = True
                    if not twin_seen[u, w]:
                        twin_seen[u, w] = True
                        twin_seen[w, u] = True
                        _uf_union(orb, u, w)
                        if ngens < MAX_GENS:
                            for v in range(n):
                                gens[ngens, v] = v
                            gens[ngens, u] = w
                            gens[ngens, w] = u
                            ngens += 1
                        else:
                            overflow = True
                    break
            if not pruned and nexpl[level] > 0 and ngens > 0:
                for v in range(n):
                    tmp_uf[v] = v
                anyg = False
                for gi in range(ngens):
                    fixes = True
                    for t in range(level):
                        if gens[gi, prefix[t]] != prefix[t]:
                            fixes = False
                            break
                    if fixes:
                        anyg = True
                        for v in range(n):
                            _uf_union(tmp_uf, v, gens[gi, v])
                if anyg:
                    rw = _uf_find(tmp_uf, w)
                    for a in range(nexpl[level]):
                        if _uf_find(tmp_uf, expl[level, a]) == rw:
                            pruned = True
                            break
            if not pruned:
                found = p
                break
        if found < 0:
            level -= 1
            continue
        w = lab_st[level, found]
        expl[level, nexpl[level]] = w
        nexpl[level] += 1
        prefix[level] = w
        c = level + 1
        for i in range(n):
            lab_st[c, i] = lab_st[level, i]
            ptn_st[c, i] = ptn_st[level, i]
        s = tcs[level]
        lab_st[c, found] = lab_st[c, s]
        lab_st[c, s] = w
        ptn_st[c, s] = 0
        _refine(adj, n, lab_st[c], ptn_st[c], s, queue, inq, cnt)
        discrete = True
        first = -1
        for i in range(n - 1):
            if ptn_st[c, i]:
                discrete = False
                first = i
                break
        if discrete:
            for i in range(n):
                pos[lab_st[c, i]] = i
            for i in range(n):
                r = adj[lab_st[c, i]]
                row = np.int64(0)
                while r:
                    low = r & -r
                    b = 0
                    while (np.int64(1) << b) != low:
                        b += 1
                    row |= np.int64(1) << pos[b]
                    r ^= low
                cur[i] = row
            cmpv = 0
            if have_best:
                for i in range(n):
                    if cur[i] < best[i]:
                        cmpv = -1
                        break
                    if cur[i] > best[i]:
                        cmpv = 1
                        break
            else:
                cmpv = -1
            if cmpv < 0:
                have_best = True
                for i in range(n):
                    best[i] = cur[i]
                    bestlab[i] = lab_st[c, i]
            elif cmpv == 0:
                ident = True
                for i in range(n):
                    if bestlab[i] != lab_st[c, i]:
                        ident = False
                        break
                if not ident:
                    if ngens < MAX_GENS:
                        for i in range(n):
                            gens[ngens, bestlab[i]] = lab_st[c, i]
                        ngens += 1
                    else:
                        overflow = True
                    for i in range(n):
                        _uf_union(orb, bestlab[i], lab_st[c, i])
        else:
            level = c
            tcs[level] = first
            e = first
            while ptn_st[level, e]:
                e += 1
            tce[level] = e
            nxt[level] = first
            nexpl[level] = 0
    for v in range(n):
        orb[v] = _uf_find(orb, v)
    return bestlab, orb, gens, ngens, overflow


@njit(cache=True)
def embed(rows, n, allowed, porder, preq, ptwin, p, deg, mode, k):
    """Search for an embedding of a prepared pattern into ``rows``.

    Pattern vertices are placed in the prepared order; preq[d] is the mask of
    earlier depths that must be adjacent to depth d, ptwin[d] an earlier depth
    holding a twin (images must increase) or -1.  mode selects degree
    constraints: none, all host degrees equal, or pairwise gaps >= k.
    """
    if p == 0:
        return True
    img = np.empty(p, np.int64)
    nextc = np.zeros(p + 1, np.int64)
    used = np.int64(0)
    d = 0
    while True:
        if d == p:
            return True
        h = nextc[d]
        if ptwin[d] >= 0 and img[ptwin[d]] + 1 > h:
            h = img[ptwin[d]] + 1
        found = -1
        while h < n:
            b = np.int64(1) << h
            if (allowed & b) and not (used & b):
                ok = True
                req = preq[d]
                t = 0
                while req:
                    if (req & 1) and not ((rows[h] >> img[t]) & 1):
                        ok = False
                        break
                    req >>= 1
                    t += 1
                if ok and mode == 1 and d > 0 and deg[h] != deg[img[0]]:
                    ok = False
                if ok and mode == 2:
                    for t in range(d):
                        diff = deg[h] - deg[img[t]]
                        if diff < 0:
                            diff = -diff
                        if diff < k:
                            ok = False
                            break
                if ok:
                    found = h
                    break
            h += 1
        if found >= 0:
            img[d] = found
            used |= np.int64(1) << found
            nextc[d] = found + 1
            d += 1
            nextc[d] = 0
        else:
            d -= 1
            if d < 0:
                return False
            used &= ~(np.int64(1) << img[d])


@njit(cache=True)
def complement_rows(rows, n):
    full = (np.int64(1) << n) - 1
    out = np.empty(n, np.int64)
    for v in range(n):
        out[v] = full & ~rows[v] & ~(np.int64(1) << v)
    return out


@njit(cache=True)
def has_singular_copy(rows, n, deg, porder, preq, ptwin, p, k):
    full = (np.int64(1) << n) - 1
    if embed(rows, n, full, porder, preq, ptwin, p, deg, EMBED_EQUAL, k):
        return True
    if p > 1 and embed(rows, n, full, porder, preq, ptwin, p, deg, EMBED_GAPPED, k):
        return True
    return False


@njit(cache=True)
def is_sr(rows, n, deg, o1, r1, t1, p1, o2, r2, t2, p2, k):
    if has_singular_copy(rows, n, deg, o1, r1, t1, p1, k):
        return False
    comp = complement_rows(rows, n)
    # complement degrees are n-1-deg; equality and gaps are unchanged
    return not has_singular_copy(comp, n, deg, o2, r2, t2, p2, k)


@njit(cache=True)
def is_rgraph(rows, n, deg, o1, r1, t1, p1, o2, r2, t2, p2):
    full = (np.int64(1) << n) - 1
    if embed(rows, n, full, o1, r1, t1, p1, deg, EMBED_PLAIN, 1):
        return False
    comp = complement_rows(rows, n)
    return not embed(comp, n, full, o2, r2, t2, p2, deg, EMBED_PLAIN, 1)


@njit(cache=True)
def _subset_is_orbit_min(S, gens, ngens, m, visited, seen):
    nseen = 1
    seen[0] = S
    visited[S] = True
    head = 0
    result = True
    while head < nseen and result:
        X = seen[head]
        head += 1
        for gi in range(ngens):
            Y = np.int64(0)
            r = X
            while r:
                low = r & -r
                b = 0
                while (np.int64(1) << b) != low:
                    b += 1
                Y |= np.int64(1) << gens[gi, b]
                r ^= low
            if Y < S:
                result = False
                break
            if not visited[Y]:
                visited[Y] = True
                seen[nseen] = Y
                nseen += 1
    for i in range(nseen):
        visited[seen[i]] = False
    return result


@njit(cache=True)
def gen_level(parents, m, mode, k, o1, r1, t1, p1, o2, r2, t2, p2, floor):
    """Extend every parent of order m by one vertex, keeping canonical children.

    Returns (out, nout, accepted, best, status).  In collect modes ``out``
    holds the children; in the SR sweep it holds the first SR-graph found
    (status 1); in the Ts sweep it holds every child attaining ``best``
    edges with no singular copy of the first pattern.  status 2 signals that
    the automorphism generator store overflowed.
    """
    n = m + 1
    P = parents.shape[0]
    cap = 1024
    out = np.empty((cap, n), np.int64)
    nout = 0
    accepted = 0
    best = floor
    status = 0
    child = np.empty(n, np.int64)
    deg = np.empty(n, np.int64)
    inv = np.empty(n, np.int64)
    pdeg = np.empty(max(m, 1), np.int64)
    nsub = np.int64(1) << m
    visited = np.zeros(nsub, np.bool_)
    seen = np.empty(nsub, np.int64)
    empty_gens = np.empty((1, max(m, 1)), np.int64)
    for pi in range(P):
        pedges = 0
        for i in range(m):
            pdeg[i] = popcount(parents[pi, i])
            pedges += pdeg[i]
        pedges //= 2
        if mode == MODE_TS_SWEEP and pedges + m < best:
            continue
        npg = 0
        pg = empty_gens
        if m > 1:
            _l, _o, pg, npg, ovf = canon(parents[pi], m)
            if ovf:
                status = 2
                return out, nout, accepted, best, status
        for S in range(nsub):
            sz = popcount(S)
            if mode == MODE_TS_SWEEP and pedges + sz < best:
                continue
            for i in range(m):
                bit = (S >> i) & 1
                child[i] = parents[pi, i] | (bit << m)
                deg[i] = pdeg[i] + bit
            child[m] = S
            deg[m] = sz
            # invariant: degree, then sum of neighbour degrees
            r = child[m]
            acc = 0
            while r:
                low = r & -r
                b = 0
                while (np.int64(1) << b) != low:
                    b += 1
                acc += deg[b]
                r ^= low
            inv[m] = deg[m] * 256 + acc
            reject = False
            nmax = 1
            for u in range(m):
                if deg[u] > deg[m]:
                    reject = True
                    break
                if deg[u] < deg[m]:
                    inv[u] = deg[u] * 256
                    continue
                r = child[u]
                acc = 0
                while r:
                    low = r & -r
                    b = 0
                    while (np.int64(1) << b) != low:
                        b += 1
                    acc += deg[b]
                    r ^= low
                inv[u] = deg[u] * 256 + acc
                if inv[u] > inv[m]:
                    reject = True
                    break
                if inv[u] == inv[m]:
                    nmax += 1
            if reject:
                continue
            if npg > 0 and not _subset_is_orbit_min(S, pg, npg, m, visited, seen):
                continue
            if mode == MODE_RGRAPHS:
                if not is_rgraph(child, n, deg, o1, r1, t1, p1, o2, r2, t2, p2):
                    continue
            if nmax > 1:
                lab, orb, _g, _ng, ovf = canon(child, n)
                if ovf:
                    status = 2
                    return out, nout, accepted, best, status
                target = -1
                for q in range(n - 1, -1, -1):
                    v = lab[q]
                    if inv[v] == inv[m]:
                        target = v
                        break
                if orb[target] != orb[m]:
                    continue
            accepted += 1
            keep = False
            if mode == MODE_COLLECT or mode == MODE_RGRAPHS:
                keep = True
            elif mode == MODE_SR_SWEEP:
                if is_sr(child, n, deg, o1, r1, t1, p1, o2, r2, t2, p2, k):
                    keep = True
                    status = 1
            else:
                if not has_singular_copy(child, n, deg, o1, r1, t1, p1, k):
                    e = pedges + sz
                    if e > best:
                        best = e
                        nout = 0
                    keep = True
            if keep:
                if nout == cap:
                    cap *= 2
                    bigger = np.empty((cap, n), np.int64)
                    bigger[:nout] = out[:nout]
                    out = bigger
                for i in range(n):
                    out[nout, i] = child[i]
                nout += 1
                if status == 1:
                    return out, nout, accepted, best, status
    return out, nout, accepted, best, status
