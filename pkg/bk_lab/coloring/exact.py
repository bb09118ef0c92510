#!/usr/bin/env python3
"""
Exact chromatic number by branch-and-bound over colour classes
"""

import logging
from typing import List, Optional, Tuple

from bk_lab.coloring.coloring import UNASSIGNED, Coloring, dsatur_color
from bk_lab.graphs.graph import Graph
from bk_lab.graphs.structure import clique_number, independence_number
from bk_lab.utils.bits import iter_bits

logger = logging.getLogger(__name__)

EXACT_SOLVER_MAX_VERTICES = 64


class ScopeError(ValueError):
    pass


class _KColoringSearch(object):
    """
    Decides k-colourability. Vertices are branched on in a fixed order; each vertex tries the colours
    1..min(used + 1, k) not already seen in its neighbourhood, and an uncoloured vertex left with no
    available colour cuts the branch immediately.
    """

    def __init__(self, g: Graph, order: List[int], k: int):
        self.g = g
        self.order = order
        self.k = k
        self.full = ((1 << k) - 1) << 1
        self.colors = [UNASSIGNED] * g.n
        self.forbidden = [0] * g.n
        self.uncolored = g.vertex_mask

    def _assign(self, v: int, c: int) -> Optional[List[int]]:
        """
        Colours v with c and forward-checks its uncoloured neighbours.
        :return: neighbours whose forbidden set changed, or None on a wipe-out (assignment already undone)
        """
        self.colors[v] = c
        self.uncolored &= ~(1 << v)
        bit = 1 << c
        touched = []
        for w in iter_bits(self.g.adj[v] & self.uncolored):
            if not self.forbidden[w] & bit:
                self.forbidden[w] |= bit
                touched.append(w)
                if self.forbidden[w] == self.full:
                    self._unassign(v, c, touched)
                    return None
        return touched

    def _unassign(self, v: int, c: int, touched: List[int]):
        bit = 1 << c
        for w in touched:
            self.forbidden[w] &= ~bit
        self.colors[v] = UNASSIGNED
        self.uncolored |= 1 << v

    def run(self, precolored: int) -> Optional[Coloring]:
        for pos in range(precolored):
            if self._assign(self.order[pos], pos + 1) is None:
                return None
        if self._search(precolored, precolored):
            return Coloring(self.colors, self.k)
        return None

    def _search(self, pos: int, used: int) -> bool:
        if pos == len(self.order):
            return True
        v = self.order[pos]
        for c in range(1, min(used + 1, self.k) + 1):
            if self.forbidden[v] >> c & 1:
                continue
            touched = self._assign(v, c)
            if touched is None:
                continue
            if self._search(pos + 1, max(used, c)):
                return True
            self._unassign(v, c, touched)
        return False


def _branching_order(g: Graph, clique: List[int]) -> List[int]:
    # clique vertices first (they take colours 1..omega), then by decreasing degree, ties by lower index
    degrees = g.degrees()
    in_clique = set(clique)
    rest = sorted((v for v in range(g.n) if v not in in_clique), key=lambda v: (-degrees[v], v))
    return list(clique) + rest


def k_coloring(g: Graph, k: int) -> Optional[Coloring]:
    """A proper colouring with at most k colours, or None if none exists."""
    if g.n == 0:
        return Coloring([], k)
    if k <= 0:
        return None
    omega, clique = clique_number(g)
    if omega > k:
        return None
    order = _branching_order(g, clique.to_list())
    return _KColoringSearch(g, order, k).run(omega)


def chromatic_number(g: Graph) -> Tuple[int, Coloring]:
    if g.n > EXACT_SOLVER_MAX_VERTICES:
        raise ScopeError(
            "exact chromatic number is limited to {} vertices, got {}".format(EXACT_SOLVER_MAX_VERTICES, g.n)
        )
    if g.n == 0:
        return 0, Coloring([])

    omega, clique = clique_number(g)
    alpha, _ = independence_number(g)
    # every colour class is independent, so at least ceil(n / alpha) classes are needed
    lower = max(omega, -(-g.n // alpha))
    upper_coloring = dsatur_color(g)
    upper = upper_coloring.num_colors
    logger.debug("chromatic bounds n=%d: lower=%d upper=%d", g.n, lower, upper)
    if lower >= upper:
        return upper, upper_coloring

    order = _branching_order(g, clique.to_list())
    for k in range(lower, upper):
        coloring = _KColoringSearch(g, order, k).run(omega)
        if coloring is not None:
            return k, coloring
    return upper, upper_coloring
