#!/usr/bin/env python3
"""
Isomorph-free generation of graphs by canonical augmentation.

Graphs are grown one vertex at a time from the empty graph. A child C = P + v is kept iff deleting the canonical
last vertex of C gives back (a graph isomorphic to) P, and children of one parent are deduplicated by certificate.
Each isomorphism class is then produced by exactly one parent representative exactly once.
"""

import logging
from typing import Callable, Iterator, Optional

from bk_lab.coloring.exact import ScopeError
from bk_lab.graphs.canonical import canonical_form
from bk_lab.graphs.graph import Graph, empty_graph
from bk_lab.graphs.graph6 import to_graph6
from bk_lab.graphs.structure import has_independent_set

logger = logging.getLogger(__name__)

ENUMERATION_MAX_VERTICES = 12

Pruning = Callable[[Graph], bool]


class IndependenceAtMost(object):
    """Hereditary pruning predicate alpha(G) <= limit."""

    def __init__(self, limit: int):
        self.limit = limit

    def __call__(self, g: Graph) -> bool:
        return not has_independent_set(g, self.limit + 1)

    def __repr__(self) -> str:
        return "IndependenceAtMost({})".format(self.limit)


def _children(parent: Graph, parent_cert: str, pruning: Optional[Pruning]) -> Iterator[Graph]:
    n = parent.n
    new_bit = 1 << n
    seen = set()
    for subset in range(1 << n):
        rows = [row | new_bit if subset >> v & 1 else row for v, row in enumerate(parent.adj)]
        rows.append(subset)
        child = Graph._trusted(n + 1, rows)
        if pruning is not None and not pruning(child):
            continue
        labeling = canonical_form(child)
        if labeling.certificate in seen:
            continue
        seen.add(labeling.certificate)
        last = labeling.labeling[-1]
        if last != n and to_graph6(canonical_form(child.delete_vertex(last)).graph) != parent_cert:
            continue
        yield labeling.graph


def _grow(parent: Graph, target: int, pruning: Optional[Pruning]) -> Iterator[Graph]:
    if parent.n == target:
        yield parent
        return
    parent_cert = to_graph6(parent)
    for child in _children(parent, parent_cert, pruning):
        yield from _grow(child, target, pruning)


def enumerate_graphs(n: int, pruning: Optional[Pruning] = None) -> Iterator[Graph]:
    """
    One canonical representative per isomorphism class of n-vertex graphs accepted by pruning.
    pruning must be hereditary (closed under vertex deletion); it is applied to every intermediate graph.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative, got {}".format(n))
    if n > ENUMERATION_MAX_VERTICES:
        raise ScopeError("enumeration is limited to {} vertices, got {}".format(ENUMERATION_MAX_VERTICES, n))
    root = empty_graph(0)
    if pruning is not None and not pruning(root):
        return
    count = 0
    for g in _grow(root, n, pruning):
        count += 1
        yield g
    logger.debug("enumerated %d graphs on %d vertices with pruning %s", count, n, pruning)
