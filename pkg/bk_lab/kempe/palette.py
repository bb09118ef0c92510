#!/usr/bin/env python3
"""
Palette profile of a centre vertex u: how the colours {1..k} are spread over N(u).
A colour on exactly one neighbour is a unique colour of u, a colour on several neighbours a repeat colour.
"""

import collections
import logging
from typing import List

from bk_lab.coloring.coloring import UNASSIGNED, Coloring, check_proper
from bk_lab.graphs.graph import Graph, VertexSet
from bk_lab.utils.bits import iter_bits, popcount

logger = logging.getLogger(__name__)

PaletteProfile = collections.namedtuple(
    "PaletteProfile", ["center", "k", "unique_vertices", "repeat_colors", "missing_colors"]
)


def palette_profile(g: Graph, c: Coloring, u: int) -> PaletteProfile:
    """
    :param c: colouring proper on G-u; u's own colour, if any, is ignored
    :return: unique_vertices maps colour i to its only i-vertex in N(u) (the A_i), repeat_colors maps a colour
        to the >= 2 neighbours carrying it (the pair X, Y in the launch configuration), missing_colors is sorted
    """
    check_proper(g, c, ignore=u)
    by_color = {}
    for v in iter_bits(g.adj[u]):
        color = c.color(v)
        if color == UNASSIGNED:
            raise ValueError("neighbour {} of centre {} is uncoloured".format(v, u))
        by_color[color] = by_color.get(color, 0) | 1 << v

    unique_vertices = {}
    repeat_colors = {}
    for color, bits in sorted(by_color.items()):
        if popcount(bits) == 1:
            unique_vertices[color] = bits.bit_length() - 1
        else:
            repeat_colors[color] = VertexSet(bits)
    missing = tuple(color for color in range(1, c.k + 1) if color not in by_color)
    return PaletteProfile(u, c.k, unique_vertices, repeat_colors, missing)


def is_launch_configuration(profile: PaletteProfile, degree: int) -> bool:
    """
    The structure forced when a (Delta-1)-colouring of G-u does not extend at u with deg(u) = Delta:
    no missing colour, Delta-2 unique colours and exactly one colour carried by exactly two neighbours.
    """
    k = profile.k
    return (
        not profile.missing_colors
        and degree == k + 1
        and len(profile.unique_vertices) == k - 1
        and len(profile.repeat_colors) == 1
        and all(len(pair) == 2 for pair in profile.repeat_colors.values())
    )


def degree_floor(g: Graph, k: int) -> List[int]:
    """
    Vertices of degree below k. A vertex with fewer than k neighbours can always be coloured last from a palette
    of k colours, so a vertex-minimal graph needing more than k colours has none.
    """
    return [v for v in range(g.n) if popcount(g.adj[v]) < k]
