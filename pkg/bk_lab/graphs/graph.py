#!/usr/bin/env python3
"""
Immutable simple undirected graphs with bit-parallel adjacency rows
"""

import logging
from typing import Iterable, Iterator, List, Sequence, Tuple

from bk_lab.utils.bits import bits_to_list, full_mask, iter_bits, list_to_bits, popcount

logger = logging.getLogger(__name__)

MAX_VERTICES = 512


class GraphError(ValueError):
    pass


def _rebuild_vertex_set(bits):
    return VertexSet(bits)


def _rebuild_graph(n, adj):
    return Graph._trusted(n, adj)


class VertexSet(object):
    """
    Immutable set of vertex indices backed by a single bitset.
    """

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise GraphError("VertexSet bits must be non-negative")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, key, value):
        raise AttributeError("VertexSet is immutable")

    def __reduce__(self):
        return _rebuild_vertex_set, (self.bits,)

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(list_to_bits(vertices))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.bits >> v & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexSet) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return "VertexSet({})".format(bits_to_list(self.bits))

    def to_list(self) -> List[int]:
        return bits_to_list(self.bits)


class Graph(object):
    """
    Simple undirected graph on vertices 0..n-1. adj[v] is the bitrow of v's neighbours.
    Graphs never change after construction; every edit returns a new graph.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or n > MAX_VERTICES:
            raise GraphError("Vertex count {} outside of 0..{}".format(n, MAX_VERTICES))
        if len(adj) != n:
            raise GraphError("Expected {} adjacency rows, got {}".format(n, len(adj)))
        mask = full_mask(n)
        for v, row in enumerate(adj):
            if row & ~mask:
                raise GraphError("Row {} has bits beyond vertex {}".format(v, n - 1))
            if row >> v & 1:
                raise GraphError("Self-loop at vertex {}".format(v))
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise GraphError("Adjacency is not symmetric for edge ({}, {})".format(v, w))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, key, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return _rebuild_graph, (self.n, self.adj)

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # rows already known to be symmetric, irreflexive and in range
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return "Graph(n={}, edges={})".format(self.n, self.edges())

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(v, w) for v in range(self.n) for w in iter_bits(self.adj[v] >> (v + 1) << (v + 1))]

    def has_edge(self, v: int, w: int) -> bool:
        self._check_vertex(v)
        self._check_vertex(w)
        return bool(self.adj[v] >> w & 1)

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def complement(self) -> "Graph":
        mask = self.vertex_mask
        return Graph._trusted(self.n, [~row & mask & ~(1 << v) for v, row in enumerate(self.adj)])

    def induced_subgraph(self, s: VertexSet) -> "Graph":
        """
        Subgraph induced by s; vertices are relabeled in ascending order of their original index.
        """
        bits = s.bits if isinstance(s, VertexSet) else s
        if bits & ~self.vertex_mask:
            raise GraphError("Vertex set {} is out of range for n={}".format(bits_to_list(bits), self.n))
        kept = bits_to_list(bits)
        position = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            row = 0
            for w in iter_bits(self.adj[v] & bits):
                row |= 1 << position[w]
            rows.append(row)
        return Graph._trusted(len(kept), rows)

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced_subgraph(self.vertex_mask & ~(1 << v))

    def add_apex(self) -> "Graph":
        """New vertex n joined to every existing vertex."""
        if self.n + 1 > MAX_VERTICES:
            raise GraphError("Apex would exceed {} vertices".format(MAX_VERTICES))
        apex_bit = 1 << self.n
        rows = [row | apex_bit for row in self.adj]
        rows.append(self.vertex_mask)
        return Graph._trusted(self.n + 1, rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """
        Graph whose vertex i is the original vertex perm[i].
        """
        if sorted(perm) != list(range(self.n)):
            raise GraphError("Relabeling is not a permutation of 0..{}".format(self.n - 1))
        position = [0] * self.n
        for i, v in enumerate(perm):
            position[v] = i
        rows = []
        for v in perm:
            row = 0
            for w in iter_bits(self.adj[v]):
                row |= 1 << position[w]
            rows.append(row)
        return Graph._trusted(self.n, rows)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise GraphError("Vertex {} out of range for n={}".format(v, self.n))


def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    if n < 0 or n > MAX_VERTICES:
        raise GraphError("Vertex count {} outside of 0..{}".format(n, MAX_VERTICES))
    rows = [0] * n
    for v, w in edges:
        if not (0 <= v < n and 0 <= w < n):
            raise GraphError("Edge ({}, {}) has an endpoint out of range for n={}".format(v, w, n))
        if v == w:
            raise GraphError("Self-loop at vertex {}".format(v))
        rows[v] |= 1 << w
        rows[w] |= 1 << v
    return Graph._trusted(n, rows)


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return empty_graph(n).complement()


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(v, a + w) for v in range(a) for w in range(b)])


def petersen_graph() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return from_edges(10, outer + spokes + inner)


def connected_components(g: Graph) -> List[VertexSet]:
    """Components ordered by their lowest vertex."""
    components = []
    remaining = g.vertex_mask
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        components.append(VertexSet(seen))
        remaining &= ~seen
    return components


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(connected_components(g)) == 1
