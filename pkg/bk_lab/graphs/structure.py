#!/usr/bin/env python3
"""
Exact structural parameters: clique number, independence number, 4K1-freeness and the special graphs of Brooks' theorem.
Cliques are found with a bitset branch-and-bound whose pruning bound comes from a greedy colouring of the candidate set.
"""

import collections
import logging
from typing import List, Sequence, Tuple

from bk_lab.graphs.graph import Graph, VertexSet, is_connected
from bk_lab.utils.bits import iter_bits, popcount

logger = logging.getLogger(__name__)

StructureSummary = collections.namedtuple(
    "StructureSummary", ["alpha", "omega", "is_4k1_free", "witness_independent_set", "witness_clique"]
)


class _SearchState(object):
    def __init__(self, target: int):
        self.best_size = 0
        self.target = target


def _color_order(adj: Sequence[int], cand: int) -> List[Tuple[int, int]]:
    """
    Greedy sequential colouring of cand; returns (vertex, colour) pairs in non-decreasing colour order.
    The colour of a vertex bounds the size of any clique among it and the vertices listed before it.
    """
    order = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            uncolored ^= low
            available ^= low
            available &= ~adj[v]
            order.append((v, color))
    return order


def _expand(adj: Sequence[int], cand: int, size: int, state: _SearchState):
    for v, color in reversed(_color_order(adj, cand)):
        if size + color <= state.best_size:
            return
        bit = 1 << v
        new_cand = cand & adj[v]
        if new_cand:
            _expand(adj, new_cand, size + 1, state)
        elif size + 1 > state.best_size:
            state.best_size = size + 1
        if state.best_size >= state.target:
            return
        cand &= ~bit


def _max_clique_size(adj: Sequence[int], cand: int, target: int = None) -> int:
    if not cand:
        return 0
    state = _SearchState(target if target is not None else popcount(cand))
    _expand(adj, cand, 0, state)
    return state.best_size


def _has_clique(adj: Sequence[int], cand: int, size: int) -> bool:
    if size <= 0:
        return True
    if popcount(cand) < size:
        return False
    return _max_clique_size(adj, cand, target=size) >= size


def _lex_first_clique(adj: Sequence[int], cand: int, size: int) -> int:
    """Lexicographically smallest (as an ascending vertex list) clique of the given size inside cand."""
    chosen = 0
    for need in range(size, 0, -1):
        for v in iter_bits(cand):
            rest = cand & adj[v] & ~((1 << (v + 1)) - 1)
            if _has_clique(adj, rest, need - 1):
                chosen |= 1 << v
                cand = rest
                break
        else:
            raise AssertionError("no clique of size {} left in candidate set".format(need))
    return chosen


def _clique_with_witness(adj: Sequence[int], cand: int) -> Tuple[int, VertexSet]:
    omega = _max_clique_size(adj, cand)
    return omega, VertexSet(_lex_first_clique(adj, cand, omega))


def clique_number(g: Graph) -> Tuple[int, VertexSet]:
    return _clique_with_witness(g.adj, g.vertex_mask)


def independence_number(g: Graph) -> Tuple[int, VertexSet]:
    return _clique_with_witness(g.complement().adj, g.vertex_mask)


def has_clique(g: Graph, size: int) -> bool:
    return _has_clique(g.adj, g.vertex_mask, size)


def has_independent_set(g: Graph, size: int) -> bool:
    return _has_clique(g.complement().adj, g.vertex_mask, size)


def is_4k1_free(g: Graph) -> bool:
    """No induced 4K1, i.e. alpha <= 3; the search stops at the first independent set of size 4."""
    return not has_independent_set(g, 4)


def is_complete(g: Graph) -> bool:
    mask = g.vertex_mask
    return all(row == mask & ~(1 << v) for v, row in enumerate(g.adj))


def is_odd_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.n % 2 == 1 and all(popcount(row) == 2 for row in g.adj) and is_connected(g)


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not g.adj[v] & s.bits for v in s)


def is_clique(g: Graph, s: VertexSet) -> bool:
    return all(not s.bits & ~(g.adj[v] | 1 << v) for v in s)


def structure_summary(g: Graph) -> StructureSummary:
    alpha, independent = independence_number(g)
    omega, clique = clique_number(g)
    return StructureSummary(alpha, omega, alpha <= 3, independent, clique)
