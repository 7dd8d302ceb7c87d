"""Immutable undirected weighted graph and the algorithms everything else builds on.

Node identifiers are opaque strings (public keys in real snapshots, decimal
indices in synthetic graphs). Parallel channels are collapsed at build time
into single edges carrying the summed capacity, so the topology is always a
simple graph. All iteration happens in sorted-NodeId order, which makes every
derived quantity reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .errors import BuildError, DomainError

NodeId = str


@dataclass(frozen=True)
class Edge:
    """Collapsed payment channel between two distinct nodes.

    ``capacity`` (satoshis) is the sum over the ``channel_count`` raw parallel
    channels folded into this edge. Endpoints are stored sorted, ``u < v``.
    """

    u: NodeId
    v: NodeId
    capacity: int
    channel_count: int = 1

    def endpoints(self) -> tuple[NodeId, NodeId]:
        return self.u, self.v


class DistanceSummary(NamedTuple):
    diameter: int
    radius: int
    mean_shortest_path: float


class Graph:
    """Immutable undirected simple graph with integer edge capacities.

    Construct through :func:`build` (or the generator/ingest helpers), not
    directly. Internally nodes are mapped to dense indices in sorted-id order
    and adjacency is kept as CSR arrays so the compiled kernels can run on it;
    removal operations always return fresh instances.
    """

    __slots__ = (
        "_ids", "_index", "_indptr", "_indices",
        "_eu", "_ev", "_ecap", "_ecount",
        "_edges_cache", "_nodeset_cache", "_adj_cache",
    )

    def __init__(self, ids, eu, ev, ecap, ecount):
        self._ids: tuple[NodeId, ...] = tuple(ids)
        self._index = {nid: i for i, nid in enumerate(self._ids)}
        self._eu = np.asarray(eu, dtype=np.int64)
        self._ev = np.asarray(ev, dtype=np.int64)
        self._ecap = np.asarray(ecap, dtype=np.int64)
        self._ecount = np.asarray(ecount, dtype=np.int64)
        n = len(self._ids)
        src = np.concatenate([self._eu, self._ev])
        dst = np.concatenate([self._ev, self._eu])
        order = np.lexsort((dst, src))
        counts = np.bincount(src, minlength=n) if src.size else np.zeros(n, np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        self._indptr = indptr
        self._indices = dst[order]
        self._edges_cache = None
        self._nodeset_cache = None
        self._adj_cache = None

    # ---------- basic accessors ----------

    @property
    def node_ids(self) -> tuple[NodeId, ...]:
        """All node ids in canonical (sorted) order."""
        return self._ids

    @property
    def nodes(self) -> frozenset[NodeId]:
        if self._nodeset_cache is None:
            self._nodeset_cache = frozenset(self._ids)
        return self._nodeset_cache

    @property
    def edges(self) -> tuple[Edge, ...]:
        if self._edges_cache is None:
            self._edges_cache = tuple(
                Edge(self._ids[u], self._ids[v], int(c), int(m))
                for u, v, c, m in zip(self._eu, self._ev, self._ecap, self._ecount)
            )
        return self._edges_cache

    @property
    def adjacency(self) -> Mapping[NodeId, frozenset[NodeId]]:
        if self._adj_cache is None:
            adj = {}
            for i, nid in enumerate(self._ids):
                lo, hi = self._indptr[i], self._indptr[i + 1]
                adj[nid] = frozenset(self._ids[j] for j in self._indices[lo:hi])
            self._adj_cache = adj
        return self._adj_cache

    def has_node(self, node: NodeId) -> bool:
        return node in self._index

    def neighbors(self, node: NodeId) -> frozenset[NodeId]:
        return self.adjacency[self._require(node)]

    def degree(self, node: NodeId) -> int:
        i = self._index[self._require(node)]
        return int(self._indptr[i + 1] - self._indptr[i])

    def number_of_nodes(self) -> int:
        return len(self._ids)

    def number_of_edges(self) -> int:
        return int(self._eu.size)

    def total_capacity_sat(self) -> int:
        return int(self._ecap.sum()) if self._ecap.size else 0

    def total_channel_count(self) -> int:
        """Raw (pre-collapse) channel count folded into this graph."""
        return int(self._ecount.sum()) if self._ecount.size else 0

    def degree_sequence(self) -> np.ndarray:
        """Degrees in canonical node order."""
        return np.diff(self._indptr)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._ids == other._ids and self.edges == other.edges

    def __hash__(self):
        return hash((self._ids, self.edges))

    def __repr__(self) -> str:
        return f"Graph(nodes={len(self._ids)}, edges={self._eu.size})"

    # ---------- internal plumbing ----------

    def _require(self, node: NodeId) -> NodeId:
        if node not in self._index:
            raise DomainError(f"unknown node {node!r}")
        return node

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) adjacency arrays over canonical node indices."""
        return self._indptr, self._indices

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(u_index, v_index, capacity) per collapsed edge."""
        return self._eu, self._ev, self._ecap

    def index_of(self, node: NodeId) -> int:
        return self._index[self._require(node)]

    def alive_mask(self) -> np.ndarray:
        return np.ones(len(self._ids), dtype=np.uint8)

    def subgraph_from_mask(self, keep: np.ndarray) -> "Graph":
        """Induced subgraph on the indices where ``keep`` is truthy."""
        keep = np.asarray(keep, dtype=bool)
        remap = np.full(len(self._ids), -1, dtype=np.int64)
        kept_idx = np.flatnonzero(keep)
        remap[kept_idx] = np.arange(kept_idx.size)
        ids = tuple(self._ids[i] for i in kept_idx)
        if self._eu.size:
            emask = keep[self._eu] & keep[self._ev]
            eu = remap[self._eu[emask]]
            ev = remap[self._ev[emask]]
            ecap = self._ecap[emask]
            ecount = self._ecount[emask]
        else:
            eu = ev = ecap = ecount = np.empty(0, dtype=np.int64)
        return Graph(ids, eu, ev, ecap, ecount)


def build(nodes: Iterable[NodeId],
          raw_edges: Iterable[tuple[NodeId, NodeId, int]]) -> Graph:
    """Build a graph from raw node/channel records.

    Self-loops are dropped; parallel edges are collapsed with summed capacity
    and accumulated channel count. Every endpoint must appear in ``nodes``.
    """
    id_set = set()
    for nid in nodes:
        if not isinstance(nid, str) or not nid:
            raise BuildError(f"node id must be a non-empty string, got {nid!r}")
        id_set.add(nid)
    ids = tuple(sorted(id_set))
    index = {nid: i for i, nid in enumerate(ids)}

    collapsed: dict[tuple[int, int], list[int]] = {}
    for e in raw_edges:
        u, v, cap = e
        if u not in index or v not in index:
            missing = u if u not in index else v
            raise BuildError(f"unknown endpoint {missing!r} in edge ({u!r}, {v!r}, {cap!r})")
        cap = int(cap)
        if cap < 0:
            raise BuildError(f"negative capacity in edge ({u!r}, {v!r}, {cap!r})")
        iu, iv = index[u], index[v]
        if iu == iv:
            continue
        key = (iu, iv) if iu < iv else (iv, iu)
        slot = collapsed.get(key)
        if slot is None:
            collapsed[key] = [cap, 1]
        else:
            slot[0] += cap
            slot[1] += 1

    keys = sorted(collapsed)
    eu = np.fromiter((k[0] for k in keys), dtype=np.int64, count=len(keys))
    ev = np.fromiter((k[1] for k in keys), dtype=np.int64, count=len(keys))
    ecap = np.fromiter((collapsed[k][0] for k in keys), dtype=np.int64, count=len(keys))
    ecount = np.fromiter((collapsed[k][1] for k in keys), dtype=np.int64, count=len(keys))
    return Graph(ids, eu, ev, ecap, ecount)


def connected_components(g: Graph) -> list[frozenset[NodeId]]:
    """Partition of the node set, largest component first.

    Ties are broken by the smallest contained NodeId so the ordering is
    deterministic.
    """
    n = g.number_of_nodes()
    if n == 0:
        return []
    indptr, indices = g.csr()
    labels, count = _kernels.component_labels(indptr, indices, g.alive_mask())
    groups: list[list[NodeId]] = [[] for _ in range(count)]
    for i, nid in enumerate(g.node_ids):
        groups[labels[i]].append(nid)
    # node_ids are sorted, so groups[c][0] is each component's smallest id
    groups.sort(key=lambda grp: (-len(grp), grp[0]))
    return [frozenset(grp) for grp in groups]


def giant_component(g: Graph) -> Graph:
    """Induced subgraph on the largest connected component."""
    if g.number_of_nodes() == 0:
        raise DomainError("giant_component: graph has no nodes")
    comps = connected_components(g)
    giant = comps[0]
    keep = np.fromiter((nid in giant for nid in g.node_ids), dtype=bool,
                       count=g.number_of_nodes())
    return g.subgraph_from_mask(keep)


def bridges(g: Graph) -> frozenset[Edge]:
    """Edges whose deletion increases the number of connected components."""
    if g.number_of_edges() == 0:
        return frozenset()
    indptr, indices = g.csr()
    us, vs, nb = _kernels.bridge_pairs(indptr, indices)
    by_pair = {(g.index_of(e.u), g.index_of(e.v)): e for e in g.edges}
    out = []
    for i in range(nb):
        a, b = int(us[i]), int(vs[i])
        out.append(by_pair[(a, b) if a < b else (b, a)])
    return frozenset(out)


def bfs_distances(g: Graph, source: NodeId) -> dict[NodeId, int]:
    """Unweighted shortest-path hop counts from ``source``; unreachable omitted."""
    src = g.index_of(source)
    indptr, indices = g.csr()
    dist = _kernels.bfs_distances(indptr, indices, g.alive_mask(), src)
    return {nid: int(d) for nid, d in zip(g.node_ids, dist) if d >= 0}


def distance_summary(g: Graph) -> DistanceSummary:
    """Diameter, radius and mean shortest path of the giant component.

    The mean is over ordered reachable pairs (u != v). Graphs whose giant
    component has fewer than two nodes have no defined distances.
    """
    if g.number_of_nodes() == 0:
        raise DomainError("distance_summary: graph has no nodes")
    comps = connected_components(g)
    giant = comps[0]
    if len(giant) < 2:
        raise DomainError("distance_summary: giant component has fewer than 2 nodes")
    mask = np.fromiter((nid in giant for nid in g.node_ids), dtype=np.uint8,
                       count=g.number_of_nodes())
    indptr, indices = g.csr()
    diameter, radius, total, pairs = _kernels.distance_stats(indptr, indices, mask)
    return DistanceSummary(int(diameter), int(radius), total / pairs)


def remove_nodes(g: Graph, victims: Sequence[NodeId]) -> Graph:
    """New graph without ``victims`` and their incident edges; ``g`` is untouched."""
    victim_idx = [g.index_of(v) for v in victims]
    keep = np.ones(g.number_of_nodes(), dtype=bool)
    keep[victim_idx] = False
    return g.subgraph_from_mask(keep)
