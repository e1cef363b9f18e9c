"""Compiled hot loops for the peelers, the oracle, and the audit tooling.

All kernels operate on the CSR arrays of a Graph plus a power table
``ptab`` with ``ptab[d] == d ** p``; degrees are always integers, so every
power evaluation is a table lookup.  Tie-breaking is the package-wide rule:
among equal keys the smallest node index wins.
"""

import numpy as np
from numba import njit

# ---------------------------------------------------------------------------
# indexed binary min-heap over (key[node], node)

@njit(cache=True)
def _less(key, a, b):
    if key[a] < key[b]:
        return True
    if key[a] > key[b]:
        return False
    return a < b


@njit(cache=True)
def _sift_up(heap, pos, key, i):
    node = heap[i]
    while i > 0:
        parent = (i - 1) >> 1
        pn = heap[parent]
        if _less(key, node, pn):
            heap[i] = pn
            pos[pn] = i
            i = parent
        else:
            break
    heap[i] = node
    pos[node] = i


@njit(cache=True)
def _sift_down(heap, pos, key, i, size):
    node = heap[i]
    while True:
        child = 2 * i + 1
        if child >= size:
            break
        right = child + 1
        if right < size and _less(key, heap[right], heap[child]):
            child = right
        cn = heap[child]
        if _less(key, cn, node):
            heap[i] = cn
            pos[cn] = i
            i = child
        else:
            break
    heap[i] = node
    pos[node] = i


@njit(cache=True)
def _heap_pop(heap, pos, key, size):
    top = heap[0]
    pos[top] = -1
    last = heap[size - 1]
    if size > 1:
        heap[0] = last
        pos[last] = 0
        _sift_down(heap, pos, key, 0, size - 1)
    return top


# ---------------------------------------------------------------------------
# shared helpers

@njit(cache=True)
def induced_degrees(indptr, indices, alive):
    """Degree of every live node inside the live set (dead rows get 0)."""
    n = indptr.shape[0] - 1
    out = np.zeros(n, np.int64)
    for v in range(n):
        if alive[v]:
            d = 0
            for e in range(indptr[v], indptr[v + 1]):
                if alive[indices[e]]:
                    d += 1
            out[v] = d
    return out


@njit(cache=True)
def scratch_removal_loss(indptr, indices, alive, deg, ptab, j):
    """Recompute the removal loss of live node j from current degrees."""
    s = ptab[deg[j]]
    for e in range(indptr[j], indptr[j + 1]):
        u = indices[e]
        if alive[u]:
            s += ptab[deg[u]] - ptab[deg[u] - 1]
    return s


@njit(cache=True)
def replay_power(indptr, indices, order, ptab):
    """Scratch power sum of every prefix set along a removal order.

    Independent check for the incrementally maintained sums: each entry is
    rebuilt from the alive flags alone, so no drift carries over.
    """
    n = indptr.shape[0] - 1
    alive = np.ones(n, np.uint8)
    out = np.empty(order.shape[0] + 1, np.float64)
    for step in range(order.shape[0] + 1):
        if step > 0:
            alive[order[step - 1]] = 0
        s = 0.0
        for v in range(n):
            if alive[v]:
                d = 0
                for e in range(indptr[v], indptr[v + 1]):
                    if alive[indices[e]]:
                        d += 1
                s += ptab[d]
        out[step] = s
    return out


# ---------------------------------------------------------------------------
# min-degree peeling (shared by simpeel and maxcore)

@njit(cache=True)
def simpeel_peel(indptr, indices, ptab):
    """Repeated min-degree removal.

    Returns (order, removal_degree, prefix_power): the removal sequence, the
    degree each node had when removed, and the incrementally maintained
    power sum after each removal (prefix_power[0] is the full-set value).
    """
    n = indptr.shape[0] - 1
    deg = np.empty(n, np.int64)
    key = np.empty(n, np.float64)
    heap = np.empty(n, np.int64)
    pos = np.empty(n, np.int64)
    alive = np.ones(n, np.uint8)
    power = 0.0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        key[v] = deg[v]
        heap[v] = v
        pos[v] = v
        power += ptab[deg[v]]
    for i in range(n // 2 - 1, -1, -1):
        _sift_down(heap, pos, key, i, n)

    order = np.empty(n, np.int64)
    removal_degree = np.empty(n, np.int64)
    prefix_power = np.empty(n + 1, np.float64)
    prefix_power[0] = power
    for step in range(n):
        v = _heap_pop(heap, pos, key, n - step)
        order[step] = v
        removal_degree[step] = deg[v]
        alive[v] = 0
        power -= ptab[deg[v]]
        for e in range(indptr[v], indptr[v + 1]):
            u = indices[e]
            if alive[u]:
                du = deg[u]
                power += ptab[du - 1] - ptab[du]
                deg[u] = du - 1
                key[u] = du - 1
                _sift_up(heap, pos, key, pos[u])
        rec = power
        if rec < 0.0:
            rec = 0.0
        prefix_power[step + 1] = rec
    if n > 0:
        prefix_power[n] = 0.0
    return order, removal_degree, prefix_power


# ---------------------------------------------------------------------------
# min-loss peeling with exact key maintenance

@njit(cache=True)
def genpeel_peel(indptr, indices, ptab, audit):
    """Repeated minimum-removal-loss peeling.

    After each removal the loss keys of the removed node's live one-hop and
    two-hop neighborhood are recomputed from scratch; keys of untouched
    nodes are unaffected by the removal, so every key is exact at all times.

    With ``audit`` set, every live key is compared against a scratch
    recomputation after every removal and the maximum relative deviation is
    returned (0.0 when maintenance is exact).
    """
    n = indptr.shape[0] - 1
    deg = np.empty(n, np.int64)
    alive = np.ones(n, np.uint8)
    power = 0.0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        power += ptab[deg[v]]

    key = np.empty(n, np.float64)
    heap = np.empty(n, np.int64)
    pos = np.empty(n, np.int64)
    for v in range(n):
        key[v] = scratch_removal_loss(indptr, indices, alive, deg, ptab, v)
        heap[v] = v
        pos[v] = v
    for i in range(n // 2 - 1, -1, -1):
        _sift_down(heap, pos, key, i, n)

    stamp = np.zeros(n, np.int64)
    touched = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    prefix_power = np.empty(n + 1, np.float64)
    prefix_power[0] = power
    max_key_err = 0.0

    for step in range(n):
        v = _heap_pop(heap, pos, key, n - step)
        size = n - step - 1
        order[step] = v
        alive[v] = 0
        power -= ptab[deg[v]]
        # phase 1: all neighbor degrees drop before any key is rebuilt
        for e in range(indptr[v], indptr[v + 1]):
            u = indices[e]
            if alive[u]:
                du = deg[u]
                power += ptab[du - 1] - ptab[du]
                deg[u] = du - 1
        # phase 2: rebuild keys across the live two-hop neighborhood
        marker = step + 1
        cnt = 0
        for e in range(indptr[v], indptr[v + 1]):
            u = indices[e]
            if alive[u]:
                if stamp[u] != marker:
                    stamp[u] = marker
                    touched[cnt] = u
                    cnt += 1
                for e2 in range(indptr[u], indptr[u + 1]):
                    w = indices[e2]
                    if alive[w] and stamp[w] != marker:
                        stamp[w] = marker
                        touched[cnt] = w
                        cnt += 1
        for t in range(cnt):
            j = touched[t]
            new_key = scratch_removal_loss(indptr, indices, alive, deg, ptab, j)
            old_key = key[j]
            key[j] = new_key
            if new_key < old_key:
                _sift_up(heap, pos, key, pos[j])
            elif new_key > old_key:
                _sift_down(heap, pos, key, pos[j], size)
        rec = power
        if rec < 0.0:
            rec = 0.0
        prefix_power[step + 1] = rec

        if audit:
            for j in range(n):
                if alive[j]:
                    s = scratch_removal_loss(indptr, indices, alive, deg, ptab, j)
                    denom = abs(s)
                    if denom < 1e-12:
                        denom = 1e-12
                    err = abs(key[j] - s) / denom
                    if err > max_key_err:
                        max_key_err = err
    if n > 0:
        prefix_power[n] = 0.0
    return order, prefix_power, max_key_err


# ---------------------------------------------------------------------------
# batched peeling round primitives (driver loop lives in peel.py)

@njit(cache=True)
def batch_round_losses(indptr, indices, alive, deg, ptab, out_nodes, out_loss):
    """Collect live nodes (ascending index) with scratch losses and power sum."""
    n = indptr.shape[0] - 1
    cnt = 0
    power = 0.0
    for j in range(n):
        if alive[j]:
            power += ptab[deg[j]]
            out_nodes[cnt] = j
            out_loss[cnt] = scratch_removal_loss(indptr, indices, alive, deg, ptab, j)
            cnt += 1
    return cnt, power


@njit(cache=True)
def batch_remove(indptr, indices, alive, deg, ptab, victims, power,
                 prefix_power, offset):
    """Remove victims in order without rebuilding losses, recording each prefix."""
    for i in range(victims.shape[0]):
        v = victims[i]
        power -= ptab[deg[v]]
        alive[v] = 0
        for e in range(indptr[v], indptr[v + 1]):
            u = indices[e]
            if alive[u]:
                du = deg[u]
                power += ptab[du - 1] - ptab[du]
                deg[u] = du - 1
        rec = power
        if rec < 0.0:
            rec = 0.0
        prefix_power[offset + i + 1] = rec
    return power


# ---------------------------------------------------------------------------
# exhaustive oracle

@njit(cache=True)
def enumerate_best_subset(nbr_mask, ptab, pop16, n):
    """Scan all node subsets for the maximum mean p-th-power degree.

    Ties resolve to the smaller set, then to the set containing the lowest
    differing node index.  Returns (mask, value, size); the empty set (mask 0,
    value 0) stands when no subset scores above zero.
    """
    best_fp = 0.0
    best_mask = np.int64(0)
    best_size = np.int64(0)
    total = np.int64(1) << n
    for m in range(1, total):
        power = 0.0
        size = 0
        for v in range(n):
            if (m >> v) & 1:
                x = nbr_mask[v] & m
                d = pop16[x & 0xFFFF] + pop16[(x >> 16) & 0xFFFF]
                power += ptab[d]
                size += 1
        fp = power / size
        if fp > best_fp:
            best_fp = fp
            best_mask = m
            best_size = size
        elif fp == best_fp and best_mask != 0:
            if size < best_size:
                best_mask = m
                best_size = size
            elif size == best_size:
                x = m ^ best_mask
                low = x & (-x)
                if m & low:
                    best_mask = m
    return best_mask, best_fp, best_size
