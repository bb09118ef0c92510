#!/usr/bin/env python3
"""
Constructive Brooks colouring: at most Delta colours for a connected graph that is neither complete nor an odd cycle.

Every construction colours greedily along a reversed BFS order so that each vertex except the root still has an
uncoloured neighbour (its BFS parent) when it is coloured. The root is chosen so that it also sees at most Delta-1
distinct colours:
  * a vertex of degree < Delta, when the graph is not regular;
  * a cut vertex, colouring each block-side separately and aligning the cut vertex colour;
  * otherwise a vertex v with non-adjacent neighbours x, y such that G - {x, y} stays connected;
    x and y share colour 1 before the greedy pass.
"""

import logging
from typing import List, Optional, Tuple

from bk_lab.coloring.coloring import UNASSIGNED, Coloring, PreconditionError, _least_absent
from bk_lab.graphs.graph import Graph, connected_components, is_connected
from bk_lab.graphs.structure import is_complete, is_odd_cycle
from bk_lab.utils.bits import iter_bits, popcount

logger = logging.getLogger(__name__)


def _bfs_order(g: Graph, root: int, within: int) -> List[int]:
    order = [root]
    seen = 1 << root
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in iter_bits(g.adj[v] & within & ~seen):
            seen |= 1 << w
            order.append(w)
    return order


def _reachable(g: Graph, root: int, within: int) -> int:
    seen = 1 << root
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adj[v]
        frontier = reach & within & ~seen
        seen |= frontier
    return seen


def _greedy_reverse_bfs(g: Graph, root: int, within: int, colors: List[int]):
    for v in reversed(_bfs_order(g, root, within)):
        used = 0
        for w in iter_bits(g.adj[v]):
            used |= 1 << colors[w]
        colors[v] = _least_absent(used & ~1)


def _two_color(g: Graph) -> Coloring:
    colors = [UNASSIGNED] * g.n
    for component in connected_components(g):
        order = _bfs_order(g, component.to_list()[0], component.bits)
        colors[order[0]] = 1
        for v in order:
            for w in iter_bits(g.adj[v]):
                if colors[w] == UNASSIGNED:
                    colors[w] = 3 - colors[v]
    return Coloring(colors)


def _find_cut_vertex(g: Graph) -> Optional[int]:
    mask = g.vertex_mask
    for v in range(g.n):
        rest = mask & ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        if _reachable(g, start, rest) != rest:
            return v
    return None


def _color_through_cut_vertex(g: Graph, cut: int) -> Coloring:
    mask = g.vertex_mask
    rest = mask & ~(1 << cut)
    final = [UNASSIGNED] * g.n
    final[cut] = 1
    while rest:
        start = (rest & -rest).bit_length() - 1
        side = _reachable(g, start, rest)
        rest &= ~side
        colors = [UNASSIGNED] * g.n
        _greedy_reverse_bfs(g, cut, side | 1 << cut, colors)
        swap = colors[cut]
        for v in iter_bits(side):
            c = colors[v]
            final[v] = 1 if c == swap else swap if c == 1 else c
    return Coloring(final)


def _find_brooks_triple(g: Graph) -> Optional[Tuple[int, int, int]]:
    mask = g.vertex_mask
    for v in range(g.n):
        neighbors = list(iter_bits(g.adj[v]))
        for a, x in enumerate(neighbors):
            for y in neighbors[a + 1 :]:
                if g.adj[x] >> y & 1:
                    continue
                rest = mask & ~(1 << x) & ~(1 << y)
                if _reachable(g, v, rest) == rest:
                    return v, x, y
    return None


def brooks_color(g: Graph) -> Coloring:
    if g.n == 0:
        raise PreconditionError("empty graph")
    if not is_connected(g):
        raise PreconditionError("disconnected graph")
    if is_complete(g):
        raise PreconditionError("complete graph")
    if is_odd_cycle(g):
        raise PreconditionError("odd cycle")

    delta = g.max_degree()
    if delta <= 2:
        coloring = _two_color(g)
    else:
        root = next((v for v in range(g.n) if popcount(g.adj[v]) < delta), None)
        if root is not None:
            colors = [UNASSIGNED] * g.n
            _greedy_reverse_bfs(g, root, g.vertex_mask, colors)
            coloring = Coloring(colors)
        else:
            cut = _find_cut_vertex(g)
            if cut is not None:
                coloring = _color_through_cut_vertex(g, cut)
            else:
                triple = _find_brooks_triple(g)
                if triple is None:
                    raise RuntimeError("no Brooks root found in a 2-connected regular non-complete graph")
                v, x, y = triple
                colors = [UNASSIGNED] * g.n
                colors[x] = colors[y] = 1
                _greedy_reverse_bfs(g, v, g.vertex_mask & ~(1 << x) & ~(1 << y), colors)
                coloring = Coloring(colors)

    assert coloring.k <= max(delta, 2), "Brooks colouring used {} colours with Delta={}".format(coloring.k, delta)
    return Coloring(coloring.assignment, max(delta, 2))


def color_components(g: Graph) -> Coloring:
    """
    Colours each component on its own: complete components with one colour per vertex, odd cycles with three
    colours, everything else with brooks_color.
    """
    colors = [UNASSIGNED] * g.n
    for component in connected_components(g):
        members = component.to_list()
        h = g.induced_subgraph(component)
        if is_complete(h):
            local = list(range(1, h.n + 1))
        elif is_odd_cycle(h):
            local = _two_color(h.delete_vertex(h.n - 1)).to_list() + [3]
        else:
            local = brooks_color(h).to_list()
        for i, v in enumerate(members):
            colors[v] = local[i]
    return Coloring(colors)
