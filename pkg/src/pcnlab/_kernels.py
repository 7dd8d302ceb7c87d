"""Compiled kernels over CSR adjacency arrays.

Every kernel is single-threaded and runs over a fixed iteration order, so
results are bit-identical regardless of how many workers the caller uses.
``alive`` masks (uint8) select the surviving subgraph without rebuilding the
CSR arrays, which keeps repeated-removal experiments cheap.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def component_labels(indptr, indices, alive):
    """Label alive nodes with 0-based component ids; dead nodes get -1.

    Returns (labels, component_count). Component ids follow discovery order,
    i.e. ascending smallest-member index.
    """
    n = alive.size
    labels = np.full(n, -1, np.int64)
    stack = np.empty(n, np.int64)
    comp = 0
    for s in range(n):
        if alive[s] == 0 or labels[s] >= 0:
            continue
        labels[s] = comp
        stack[0] = s
        top = 1
        while top > 0:
            top -= 1
            v = stack[top]
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if alive[w] != 0 and labels[w] < 0:
                    labels[w] = comp
                    stack[top] = w
                    top += 1
        comp += 1
    return labels, comp


@njit(cache=True, nogil=True)
def components_summary(indptr, indices, alive):
    """(component_count, giant_size) among alive nodes, without materializing labels."""
    n = alive.size
    seen = np.zeros(n, np.uint8)
    stack = np.empty(n, np.int64)
    count = 0
    giant = 0
    for s in range(n):
        if alive[s] == 0 or seen[s] != 0:
            continue
        count += 1
        seen[s] = 1
        stack[0] = s
        top = 1
        size = 0
        while top > 0:
            top -= 1
            v = stack[top]
            size += 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if alive[w] != 0 and seen[w] == 0:
                    seen[w] = 1
                    stack[top] = w
                    top += 1
        if size > giant:
            giant = size
    return count, giant


@njit(cache=True, nogil=True)
def bfs_distances(indptr, indices, alive, source):
    """Hop counts from ``source`` over alive nodes; -1 marks unreachable."""
    n = alive.size
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if alive[w] != 0 and dist[w] < 0:
                dist[w] = dv + 1
                queue[tail] = w
                tail += 1
    return dist


@njit(cache=True, nogil=True)
def distance_stats(indptr, indices, alive):
    """All-pairs BFS over alive nodes: (diameter, radius, dist_sum, ordered_pairs).

    Eccentricities and sums only count reachable pairs, so callers normally
    pass the mask of a single connected component.
    """
    n = alive.size
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    diameter = 0
    radius = np.int64(2**62)
    total = 0.0
    pairs = 0
    any_source = False
    for s in range(n):
        if alive[s] == 0:
            continue
        any_source = True
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        ecc = 0
        while head < tail:
            v = queue[head]
            head += 1
            dv = dist[v]
            if dv > ecc:
                ecc = dv
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if alive[w] != 0 and dist[w] < 0:
                    dist[w] = dv + 1
                    total += dv + 1
                    queue[tail] = w
                    tail += 1
        pairs += tail - 1
        if ecc > diameter:
            diameter = ecc
        if ecc < radius:
            radius = ecc
        for i in range(tail):
            dist[queue[i]] = -1
    if not any_source:
        radius = 0
    return diameter, radius, total, pairs


@njit(cache=True, nogil=True)
def closeness_values(indptr, indices, alive):
    """Component-restricted closeness: reached_count / sum_of_distances per node.

    Isolated nodes (nothing reachable) get 0.
    """
    n = alive.size
    out = np.zeros(n, np.float64)
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        if alive[s] == 0:
            continue
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        dsum = 0.0
        while head < tail:
            v = queue[head]
            head += 1
            dv = dist[v]
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if alive[w] != 0 and dist[w] < 0:
                    dist[w] = dv + 1
                    dsum += dv + 1
                    queue[tail] = w
                    tail += 1
        if dsum > 0.0:
            out[s] = tail / dsum
        for i in range(tail):
            dist[queue[i]] = -1
    return out


@njit(cache=True, nogil=True)
def betweenness_values(indptr, indices, alive):
    """Exact unweighted betweenness via forward BFS + dependency accumulation.

    Each unordered pair is counted once (the two-directions sum is halved) and
    endpoints are excluded. Path counts are float64.
    """
    n = alive.size
    bc = np.zeros(n, np.float64)
    dist = np.full(n, -1, np.int64)
    sigma = np.zeros(n, np.float64)
    delta = np.zeros(n, np.float64)
    order = np.empty(n, np.int64)
    for s in range(n):
        if alive[s] == 0:
            continue
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        cnt = 1
        head = 0
        while head < cnt:
            v = order[head]
            head += 1
            dv = dist[v]
            sv = sigma[v]
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if alive[w] == 0:
                    continue
                if dist[w] < 0:
                    dist[w] = dv + 1
                    order[cnt] = w
                    cnt += 1
                if dist[w] == dv + 1:
                    sigma[w] += sv
        for i in range(cnt - 1, 0, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            dw = dist[w]
            for k in range(indptr[w], indptr[w + 1]):
                v = indices[k]
                if alive[v] != 0 and dist[v] == dw - 1:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
        for i in range(cnt):
            v = order[i]
            dist[v] = -1
            sigma[v] = 0.0
            delta[v] = 0.0
    for i in range(n):
        bc[i] *= 0.5
    return bc


@njit(cache=True, nogil=True)
def bridge_pairs(indptr, indices):
    """Bridge edges by iterative DFS low-link; returns (us, vs, count).

    Assumes a simple graph (no parallel edges), so skipping the parent vertex
    is equivalent to skipping the tree edge.
    """
    n = indptr.size - 1
    pre = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    parent = np.full(n, -1, np.int64)
    cursor = indptr[:-1].copy()
    stack = np.empty(n, np.int64)
    m = indices.size // 2
    us = np.empty(m, np.int64)
    vs = np.empty(m, np.int64)
    nb = 0
    counter = 0
    for root in range(n):
        if pre[root] >= 0:
            continue
        pre[root] = counter
        low[root] = counter
        counter += 1
        stack[0] = root
        sp = 1
        while sp > 0:
            v = stack[sp - 1]
            k = cursor[v]
            if k < indptr[v + 1]:
                cursor[v] = k + 1
                w = indices[k]
                if w == parent[v]:
                    continue
                if pre[w] < 0:
                    parent[w] = v
                    pre[w] = counter
                    low[w] = counter
                    counter += 1
                    stack[sp] = w
                    sp += 1
                elif pre[w] < low[v]:
                    low[v] = pre[w]
            else:
                sp -= 1
                if sp > 0:
                    p = stack[sp - 1]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > pre[p]:
                        us[nb] = p
                        vs[nb] = v
                        nb += 1
    return us, vs, nb


@njit(cache=True, nogil=True)
def argmax_alive(values, alive, rank):
    """Index of the alive node maximizing ``values``; ties go to smallest ``rank``.

    Returns -1 when no node is alive.
    """
    best = -1
    for i in range(values.size):
        if alive[i] == 0:
            continue
        if best < 0 or values[i] > values[best] or (
            values[i] == values[best] and rank[i] < rank[best]
        ):
            best = i
    return best


@njit(cache=True, nogil=True)
def triangle_stats(indptr, indices):
    """(3 * triangle_count, connected_triple_count) for the whole graph.

    Neighbor lists must be sorted; triangles are counted once per corner via
    sorted-list intersection on each edge direction.
    """
    n = indptr.size - 1
    closed = 0
    triples = 0
    for v in range(n):
        deg = indptr[v + 1] - indptr[v]
        triples += deg * (deg - 1) // 2
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            # count common neighbors of v and w (each triangle corner at v
            # is seen twice, once per incident edge)
            a = indptr[v]
            b = indptr[w]
            while a < indptr[v + 1] and b < indptr[w + 1]:
                x = indices[a]
                y = indices[b]
                if x == y:
                    closed += 1
                    a += 1
                    b += 1
                elif x < y:
                    a += 1
                else:
                    b += 1
    # every triangle contributes 2 to ``closed`` at each of its 3 corners
    return closed // 2, triples
