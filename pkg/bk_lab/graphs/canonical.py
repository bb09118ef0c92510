#!/usr/bin/env python3
"""
Canonical labelling for small graphs: iterated degree refinement of an ordered partition, individualisation of
one vertex of the first non-trivial cell, and backtracking. The leaf with the lexicographically largest adjacency
rows is the canonical form. Vertices that are twins of an already tried vertex are skipped, since swapping two
twins is an automorphism.
"""

import collections
import logging
from typing import List, Optional, Tuple

from bk_lab.graphs.graph import Graph
from bk_lab.graphs.graph6 import to_graph6
from bk_lab.utils.bits import iter_bits, lowest_bit, popcount

logger = logging.getLogger(__name__)

CanonicalLabeling = collections.namedtuple("CanonicalLabeling", ["certificate", "labeling", "graph"])


def _refine(adj, cells: List[int]) -> List[int]:
    while True:
        refined = []
        for cell in cells:
            if popcount(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in iter_bits(cell):
                signature = tuple(popcount(adj[v] & other) for other in cells)
                groups[signature] = groups.get(signature, 0) | 1 << v
            refined.extend(groups[s] for s in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _are_twins(adj, v: int, w: int) -> bool:
    return adj[v] & ~(1 << w) == adj[w] & ~(1 << v)


class _CanonicalSearch(object):
    def __init__(self, g: Graph):
        self.g = g
        self.best_rows = None  # type: Optional[Tuple[int, ...]]
        self.best_perm = None  # type: Optional[List[int]]
        self.leaves = 0

    def run(self):
        if self.g.n == 0:
            self.best_rows, self.best_perm = (), []
            return
        self._search([self.g.vertex_mask])

    def _search(self, cells: List[int]):
        adj = self.g.adj
        cells = _refine(adj, cells)
        target = next((i for i, cell in enumerate(cells) if popcount(cell) > 1), None)
        if target is None:
            self._leaf([lowest_bit(cell) for cell in cells])
            return
        cell = cells[target]
        tried = []
        for v in iter_bits(cell):
            if any(_are_twins(adj, v, w) for w in tried):
                continue
            tried.append(v)
            self._search(cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :])

    def _leaf(self, perm: List[int]):
        self.leaves += 1
        rows = self.g.relabel(perm).adj
        if self.best_rows is None or rows > self.best_rows:
            self.best_rows = rows
            self.best_perm = perm


def canonical_form(g: Graph) -> CanonicalLabeling:
    """
    :return: certificate (graph6 of the canonical graph), labeling (labeling[i] = vertex of g placed at i)
        and the canonical graph itself; isomorphic graphs get identical certificates and canonical graphs
    """
    search = _CanonicalSearch(g)
    search.run()
    canonical = Graph._trusted(g.n, search.best_rows)
    return CanonicalLabeling(to_graph6(canonical), search.best_perm, canonical)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g).certificate == canonical_form(h).certificate
