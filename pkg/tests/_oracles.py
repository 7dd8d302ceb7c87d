"""Naive reference implementations used to cross-check the fast paths.

Everything here is deliberately simple and slow (adjacency dicts, explicit
enumeration, direct series summation) and never shares code with the package.
"""

from __future__ import annotations

import itertools
import math
from collections import deque


def adjacency(g):
    return {u: set(g.adjacency[u]) for u in g.node_ids}


def bfs_dist(adj, source):
    dist = {source: 0}
    q = deque([source])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def floyd_warshall(g):
    """All-pairs hop counts as dict-of-dict; missing entry = unreachable."""
    nodes = list(g.node_ids)
    inf = math.inf
    d = {u: {v: (0 if u == v else inf) for v in nodes} for u in nodes}
    for e in g.edges:
        d[e.u][e.v] = 1
        d[e.v][e.u] = 1
    for k in nodes:
        for i in nodes:
            dik = d[i][k]
            if dik == inf:
                continue
            for j in nodes:
                alt = dik + d[k][j]
                if alt < d[i][j]:
                    d[i][j] = alt
    return {u: {v: dv for v, dv in row.items() if dv != inf} for u, row in d.items()}


def components(g):
    adj = adjacency(g)
    seen = set()
    out = []
    for s in g.node_ids:
        if s in seen:
            continue
        comp = set(bfs_dist(adj, s))
        seen |= comp
        out.append(frozenset(comp))
    out.sort(key=lambda c: (-len(c), min(c)))
    return out


def bridges(g):
    """An edge is a bridge iff removing it increases the component count."""
    base = len(components(g))
    adj = adjacency(g)
    found = set()
    for e in g.edges:
        adj[e.u].discard(e.v)
        adj[e.v].discard(e.u)
        seen = set()
        cnt = 0
        for s in g.node_ids:
            if s in seen:
                continue
            cnt += 1
            seen |= set(bfs_dist(adj, s))
        if cnt == base + 1:
            found.add((e.u, e.v))
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    return found


def all_shortest_paths(adj, s, t, dist):
    """Every shortest s->t path, via DFS over the BFS distance dag."""
    if t not in dist:
        return []
    paths = []

    def walk(v, acc):
        if v == t:
            paths.append(acc)
            return
        for w in adj[v]:
            if dist.get(w) == dist[v] + 1 and dist.get(t, 0) >= dist[w]:
                walk(w, acc + [w])

    walk(s, [s])
    return [p for p in paths if len(p) - 1 == dist[t]]


def betweenness(g):
    """Path-enumeration betweenness: unordered pairs once, endpoints excluded."""
    adj = adjacency(g)
    nodes = list(g.node_ids)
    score = {v: 0.0 for v in nodes}
    for s, t in itertools.combinations(nodes, 2):
        dist = bfs_dist(adj, s)
        paths = all_shortest_paths(adj, s, t, dist)
        if not paths:
            continue
        sigma = len(paths)
        for p in paths:
            for v in p[1:-1]:
                score[v] += 1.0 / sigma
    return score


def closeness(g):
    """Component-size over distance-sum; isolated nodes get 0."""
    adj = adjacency(g)
    out = {}
    for u in g.node_ids:
        dist = bfs_dist(adj, u)
        total = sum(dist.values())
        out[u] = len(dist) / total if total else 0.0
    return out


def local_clustering(g, u):
    adj = adjacency(g)
    nbrs = adj[u]
    k = len(nbrs)
    if k < 2:
        return 0.0
    links = sum(1 for a, b in itertools.combinations(sorted(nbrs), 2) if b in adj[a])
    return 2.0 * links / (k * (k - 1))


def transitivity(g):
    adj = adjacency(g)
    triangles = 0
    triples = 0
    for v in g.node_ids:
        k = len(adj[v])
        triples += k * (k - 1) // 2
        for a, b in itertools.combinations(sorted(adj[v]), 2):
            if b in adj[a]:
                triangles += 1  # closed triples, i.e. 3x the triangle count
    return triangles / triples if triples else None


def distance_summary(g):
    """(diameter, radius, mean over ordered reachable pairs) of the giant component."""
    giant = components(g)[0]
    d = floyd_warshall(g)
    ecc = {}
    total = 0
    pairs = 0
    for u in giant:
        row = {v: dv for v, dv in d[u].items() if v in giant and v != u}
        ecc[u] = max(row.values())
        total += sum(row.values())
        pairs += len(row)
    return max(ecc.values()), min(ecc.values()), total / pairs


def is_independent_set(g, nodes):
    adj = adjacency(g)
    return all(b not in adj[a] for a, b in itertools.combinations(sorted(nodes), 2))


def is_maximal_independent_set(g, nodes):
    if not is_independent_set(g, nodes):
        return False
    adj = adjacency(g)
    chosen = set(nodes)
    return all(adj[v] & chosen for v in g.node_ids if v not in chosen)


def zeta_series(s, terms=10_000_000):
    """Riemann zeta by direct series summation (pairwise numpy sum, no closed forms)."""
    import numpy as np

    k = np.arange(1, terms + 1, dtype=np.float64)
    return float(np.sum(k ** -s))


def hurwitz_series(s, a, terms=500_000):
    """Hurwitz zeta by direct summation plus an integral tail bound midpoint."""
    import numpy as np

    j = np.arange(terms, dtype=np.float64)
    total = float(np.sum((a + j) ** -s))
    # tail bracketed by the integrals starting at a+terms-1 and a+terms
    hi = (a + terms - 1) ** (1 - s) / (s - 1)
    lo = (a + terms) ** (1 - s) / (s - 1)
    return total + (hi + lo) / 2.0
