#!/usr/bin/env python3
"""
Colouring data model and the heuristic colourers.
Colours are 1-based, matching the palette S = {1, ..., k}; UNASSIGNED marks an uncoloured vertex.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from bk_lab.graphs.graph import Graph, VertexSet
from bk_lab.utils.bits import iter_bits, popcount

logger = logging.getLogger(__name__)

UNASSIGNED = 0

ColorClasses = Dict[int, VertexSet]


class ImproperColoringError(ValueError):
    def __init__(self, edge: Tuple[int, int], color: int):
        super().__init__("improper colouring: edge ({}, {}) has both ends coloured {}".format(edge[0], edge[1], color))
        self.edge = edge
        self.color = color


class PreconditionError(ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _rebuild_coloring(assignment, k):
    return Coloring(assignment, k)


class Coloring(object):
    """
    Immutable assignment vertex -> colour in {1..k} or UNASSIGNED.
    """

    __slots__ = ("assignment", "k")

    def __init__(self, assignment: Iterable[int], k: int = None):
        assignment = tuple(assignment)
        top = max(assignment, default=0)
        if k is None:
            k = top
        if k < top:
            raise ValueError("colour {} exceeds the palette size k={}".format(top, k))
        if any(c < 0 for c in assignment):
            raise ValueError("negative colour in assignment")
        object.__setattr__(self, "assignment", assignment)
        object.__setattr__(self, "k", k)

    def __setattr__(self, key, value):
        raise AttributeError("Coloring is immutable")

    def __reduce__(self):
        return _rebuild_coloring, (self.assignment, self.k)

    @classmethod
    def empty(cls, n: int, k: int = 0) -> "Coloring":
        return cls([UNASSIGNED] * n, k)

    def __eq__(self, other) -> bool:
        return isinstance(other, Coloring) and self.assignment == other.assignment and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.assignment, self.k))

    def __repr__(self) -> str:
        return "Coloring({}, k={})".format(list(self.assignment), self.k)

    def __len__(self) -> int:
        return len(self.assignment)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def color(self, v: int) -> int:
        return self.assignment[v]

    def is_total(self, ignore: int = None) -> bool:
        return all(c != UNASSIGNED for v, c in enumerate(self.assignment) if v != ignore)

    @property
    def num_colors(self) -> int:
        return len({c for c in self.assignment if c != UNASSIGNED})

    def with_colors(self, updates: Dict[int, int], k: int = None) -> "Coloring":
        assignment = list(self.assignment)
        for v, c in updates.items():
            assignment[v] = c
        return Coloring(assignment, self.k if k is None else k)

    def with_palette(self, k: int) -> "Coloring":
        return Coloring(self.assignment, k)

    def class_bits(self, c: int) -> int:
        bits = 0
        for v, color in enumerate(self.assignment):
            if color == c:
                bits |= 1 << v
        return bits

    def classes(self) -> ColorClasses:
        bits = {}
        for v, c in enumerate(self.assignment):
            if c != UNASSIGNED:
                bits[c] = bits.get(c, 0) | 1 << v
        return {c: VertexSet(b) for c, b in sorted(bits.items())}

    def neighbor_colors(self, g: Graph, v: int, ignore: int = None) -> int:
        """Bitmask of the colours present in N(v), bit c set for colour c."""
        mask = 0
        row = g.adj[v] if ignore is None else g.adj[v] & ~(1 << ignore)
        for w in iter_bits(row):
            mask |= 1 << self.assignment[w]
        return mask & ~1

    def relabel_colors(self) -> "Coloring":
        """Renumbers colours by first occurrence in vertex order."""
        mapping = {}
        for c in self.assignment:
            if c != UNASSIGNED and c not in mapping:
                mapping[c] = len(mapping) + 1
        return Coloring([mapping.get(c, UNASSIGNED) for c in self.assignment], len(mapping))

    def to_list(self) -> List[int]:
        return list(self.assignment)


def find_conflict(g: Graph, c: Coloring, ignore: int = None) -> Optional[Tuple[int, int]]:
    """
    First edge (v, w), v < w, whose assigned ends share a colour; vertex `ignore` is treated as uncoloured.
    """
    if c.n != g.n:
        raise ValueError("colouring has {} entries for a graph on {} vertices".format(c.n, g.n))
    classes = {}
    for v, color in enumerate(c.assignment):
        if color != UNASSIGNED and v != ignore:
            classes[color] = classes.get(color, 0) | 1 << v
    for v, color in enumerate(c.assignment):
        if color == UNASSIGNED or v == ignore:
            continue
        clash = g.adj[v] & classes[color] & ~((1 << (v + 1)) - 1)
        if clash:
            return v, (clash & -clash).bit_length() - 1
    return None


def check_proper(g: Graph, c: Coloring, ignore: int = None):
    edge = find_conflict(g, c, ignore=ignore)
    if edge is not None:
        raise ImproperColoringError(edge, c.color(edge[0]))


def is_proper(g: Graph, c: Coloring) -> bool:
    return find_conflict(g, c) is None


def _least_absent(mask: int) -> int:
    # lowest colour >= 1 whose bit is clear
    c = 1
    while mask >> c & 1:
        c += 1
    return c


def greedy_color(g: Graph, order: Sequence[int]) -> Coloring:
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices 0..{}".format(g.n - 1))
    assignment = [UNASSIGNED] * g.n
    for v in order:
        used = 0
        for w in iter_bits(g.adj[v]):
            used |= 1 << assignment[w]
        assignment[v] = _least_absent(used)
    return Coloring(assignment)


def dsatur_color(g: Graph) -> Coloring:
    """
    DSATUR: colour next the vertex seeing the most distinct colours; ties by higher degree, then lower index.
    """
    degrees = g.degrees()
    assignment = [UNASSIGNED] * g.n
    saturation = [0] * g.n
    uncolored = set(range(g.n))
    while uncolored:
        v = max(uncolored, key=lambda x: (popcount(saturation[x]), degrees[x], -x))
        c = _least_absent(saturation[v])
        assignment[v] = c
        uncolored.discard(v)
        for w in iter_bits(g.adj[v]):
            saturation[w] |= 1 << c
    return Coloring(assignment)
