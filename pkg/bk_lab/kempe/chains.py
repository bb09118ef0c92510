#!/usr/bin/env python3
"""
Kempe chains: connected components of the subgraph induced by two colour classes i and j.
Exchanging i and j on one whole component keeps a proper colouring proper.
"""

import collections
import logging
from typing import List

from bk_lab.coloring.coloring import Coloring
from bk_lab.graphs.graph import Graph, VertexSet
from bk_lab.utils.bits import iter_bits

logger = logging.getLogger(__name__)

KempeChain = collections.namedtuple("KempeChain", ["colors", "vertices"])


class StaleChainError(ValueError):
    pass


def _component_bits(g: Graph, c: Coloring, v: int, i: int, j: int) -> int:
    within = c.class_bits(i) | c.class_bits(j)
    seen = 1 << v
    frontier = seen
    while frontier:
        reach = 0
        for w in iter_bits(frontier):
            reach |= g.adj[w]
        frontier = reach & within & ~seen
        seen |= frontier
    return seen


def kempe_component(g: Graph, c: Coloring, v: int, i: int, j: int) -> KempeChain:
    if i == j:
        raise ValueError("a Kempe chain needs two distinct colours, got {} twice".format(i))
    if c.color(v) not in (i, j):
        raise ValueError("vertex {} is coloured {}, not {} or {}".format(v, c.color(v), i, j))
    return KempeChain((min(i, j), max(i, j)), VertexSet(_component_bits(g, c, v, i, j)))


def kempe_chains(g: Graph, c: Coloring, i: int, j: int) -> List[KempeChain]:
    """All {i, j} chains, ordered by lowest vertex."""
    chains = []
    remaining = c.class_bits(i) | c.class_bits(j)
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        chain = kempe_component(g, c, v, i, j)
        chains.append(chain)
        remaining &= ~chain.vertices.bits
    return chains


def kempe_swap(g: Graph, c: Coloring, chain: KempeChain) -> Coloring:
    i, j = chain.colors
    members = chain.vertices.to_list()
    if not members:
        raise StaleChainError("empty chain")
    if any(c.color(v) not in (i, j) for v in members):
        raise StaleChainError("chain {} is not {}-{} coloured any more".format(members, i, j))
    if _component_bits(g, c, members[0], i, j) != chain.vertices.bits:
        raise StaleChainError("chain {} is no longer a maximal {}-{} component".format(members, i, j))
    return c.with_colors({v: j if c.color(v) == i else i for v in members})
