#!/usr/bin/env python3
"""
Recolouring tactics around a centre vertex u and the colouring-extension procedure built on them.

A colouring of G-u extends to u as soon as some colour of the palette is absent from N(u). The tactics try to make
that happen by recolouring single vertices and exchanging colours along Kempe chains; bk_color strips maximum-degree
vertices one at a time and re-inserts them with extend_coloring, falling back to the exact solver when the tactics
run out.
"""

import collections
import logging
from typing import Dict, List, Optional, Tuple

from bk_lab.coloring.brooks import color_components
from bk_lab.coloring.coloring import UNASSIGNED, Coloring, PreconditionError, check_proper, is_proper
from bk_lab.coloring.exact import EXACT_SOLVER_MAX_VERTICES, ScopeError, chromatic_number
from bk_lab.graphs.graph import Graph
from bk_lab.graphs.structure import clique_number, is_4k1_free
from bk_lab.kempe.chains import kempe_component, kempe_swap
from bk_lab.kempe.palette import is_launch_configuration, palette_profile
from bk_lab.utils.bits import iter_bits

logger = logging.getLogger(__name__)

NO_MOVE = None
FAILED = "FAILED"

MIN_DELTA = 9
DEFAULT_TACTIC_DEPTH = 4
DEFAULT_MAX_STATES = 20000

RECOLOR = "recolor"
KEMPE_SWAP = "kempe_swap"
ASSIGN_CENTER = "assign_center"

STAGE_DIRECT = "direct"
STAGE_FREE_COLOR = "free_color"
STAGE_CASCADE = "cascade"

TacticStep = collections.namedtuple("TacticStep", ["name", "vertices", "before", "after"])

ExtensionRecord = collections.namedtuple(
    "ExtensionRecord", ["vertex", "n", "degree", "k", "stage", "launch_configuration"]
)

BkOutcome = collections.namedtuple(
    "BkOutcome",
    [
        "coloring",
        "bound",
        "within_bound",
        "extensions",
        "traces",
        "tactic_success_rate",
        "tactic_outcome",
    ],
)


def _apply(c: Coloring, step: TacticStep) -> Coloring:
    return c.with_colors(dict(zip(step.vertices, step.after)))


class TacticTrace(object):
    """
    Audit trail of one extension attempt: the colouring of G-u it started from and every move applied to it.
    The last step of a successful trace colours the centre.
    """

    def __init__(self, center: int, initial: Coloring):
        self.center = center
        self.initial = initial
        self.steps = []  # type: List[TacticStep]
        self.outcome = FAILED
        self.stage = None
        self.final = None

    def add(self, step: TacticStep):
        self.steps.append(step)

    def replay(self, g: Graph = None) -> Coloring:
        """
        Re-applies the steps to the initial colouring. With g given, every intermediate colouring is checked
        to be proper on G-u (and the final one on G).
        """
        c = self.initial
        for step in self.steps:
            current = tuple(c.color(v) for v in step.vertices)
            if current != tuple(step.before):
                raise ValueError("step {} expects colours {}, found {}".format(step.name, step.before, current))
            c = _apply(c, step)
            if g is not None:
                check_proper(g, c, ignore=None if step.name == ASSIGN_CENTER else self.center)
        return c

    def to_lines(self) -> List[str]:
        lines = ["center {} k={}".format(self.center, self.initial.k)]
        for step in self.steps:
            lines.append(
                "{} vertices={} before={} after={}".format(
                    step.name, list(step.vertices), list(step.before), list(step.after)
                )
            )
        lines.append("outcome {} stage={}".format(self.outcome, self.stage))
        return lines

    def to_dict(self) -> Dict:
        return {
            "center": self.center,
            "k": self.initial.k,
            "initial": self.initial.to_list(),
            "steps": [
                {"name": s.name, "vertices": list(s.vertices), "before": list(s.before), "after": list(s.after)}
                for s in self.steps
            ],
            "outcome": self.outcome,
            "stage": self.stage,
        }


def _free_color_at(g: Graph, c: Coloring, u: int) -> Optional[int]:
    used = c.neighbor_colors(g, u)
    for r in range(1, c.k + 1):
        if not used >> r & 1:
            return r
    return None


def _distance_two_ball(g: Graph, u: int) -> int:
    reach = g.adj[u]
    for v in iter_bits(g.adj[u]):
        reach |= g.adj[v]
    return reach & ~(1 << u)


def _recolor_step(g: Graph, c: Coloring, u: int, v: int) -> Optional[TacticStep]:
    own = c.color(v)
    blocked = c.neighbor_colors(g, v, ignore=u) | 1 << own
    for r in range(1, c.k + 1):
        if not blocked >> r & 1:
            return TacticStep(RECOLOR, (v,), (own,), (r,))
    return None


def tactic_free_color(g: Graph, c: Coloring, u: int, v: int) -> Optional[Coloring]:
    """
    Recolours v with the lowest colour r != c(v) missing from N(v), u ignored.
    :return: the new colouring or NO_MOVE
    """
    if not g.adj[u] >> v & 1:
        raise ValueError("vertex {} is not a neighbour of {}".format(v, u))
    step = _recolor_step(g, c, u, v)
    if step is None:
        return NO_MOVE
    return _apply(c, step)


def _moves(g: Graph, c: Coloring, u: int, ball: int):
    # single recolours first, then chain swaps; vertices ascending, colours ascending
    for v in iter_bits(ball):
        own = c.color(v)
        blocked = c.neighbor_colors(g, v, ignore=u) | 1 << own
        for r in range(1, c.k + 1):
            if not blocked >> r & 1:
                step = TacticStep(RECOLOR, (v,), (own,), (r,))
                yield step, _apply(c, step)

    seen = set()
    for v in iter_bits(ball):
        own = c.color(v)
        for j in range(1, c.k + 1):
            if j == own:
                continue
            chain = kempe_component(g, c, v, own, j)
            # a singleton chain is a plain recolour
            if len(chain.vertices) == 1:
                continue
            key = (chain.colors, chain.vertices.bits)
            if key in seen:
                continue
            seen.add(key)
            swapped = kempe_swap(g, c, chain)
            members = chain.vertices.to_list()
            step = TacticStep(
                KEMPE_SWAP,
                tuple(members),
                tuple(c.color(w) for w in members),
                tuple(swapped.color(w) for w in members),
            )
            yield step, swapped


def _cascade_search(g: Graph, c: Coloring, u: int, depth: int, max_states: int) -> Optional[List[TacticStep]]:
    """
    Breadth-first over move sequences of length <= depth, so the shortest successful sequence in move order wins.
    """
    ball = _distance_two_ball(g, u)
    parents = {c.assignment: None}
    frontier = [c]
    for level in range(depth):
        next_frontier = []
        for state in frontier:
            for step, child in _moves(g, state, u, ball):
                if child.assignment in parents:
                    continue
                parents[child.assignment] = (state.assignment, step)
                if _free_color_at(g, child, u) is not None:
                    steps = []
                    key = child.assignment
                    while parents[key] is not None:
                        key, move = parents[key]
                        steps.append(move)
                    return steps[::-1]
                if len(parents) > max_states:
                    logger.debug("cascade at u=%d gave up after %d states (level %d)", u, len(parents), level + 1)
                    return None
                next_frontier.append(child)
        frontier = next_frontier
        if not frontier:
            break
    return None


def tactic_chain_cascade(
    g: Graph, c: Coloring, u: int, depth: int = DEFAULT_TACTIC_DEPTH, max_states: int = DEFAULT_MAX_STATES
) -> Optional[Coloring]:
    """
    Bounded search over recolours and Kempe swaps on vertices within distance 2 of u.
    :return: a recoloured G-u with some colour missing from N(u) (u left uncoloured), or NO_MOVE
    """
    if depth < 1:
        raise ValueError("cascade depth must be >= 1, got {}".format(depth))
    check_proper(g, c, ignore=u)
    c = c.with_colors({u: UNASSIGNED})
    steps = _cascade_search(g, c, u, depth, max_states)
    if steps is None:
        return NO_MOVE
    for step in steps:
        c = _apply(c, step)
    return c


def _finish(trace: TacticTrace, g: Graph, c: Coloring, u: int, stage: str) -> Coloring:
    r = _free_color_at(g, c, u)
    trace.add(TacticStep(ASSIGN_CENTER, (u,), (UNASSIGNED,), (r,)))
    trace.outcome = r
    trace.stage = stage
    trace.final = c.with_colors({u: r})
    return trace.final


def extend_coloring(
    g: Graph,
    u: int,
    c: Coloring,
    k: int,
    depth: int = DEFAULT_TACTIC_DEPTH,
    max_states: int = DEFAULT_MAX_STATES,
) -> Tuple[Optional[Coloring], TacticTrace]:
    """
    Extends a k-colouring of G-u to G: direct assignment, then one free recolour of a neighbour, then the cascade.
    :param c: total proper colouring of G-u on g's vertex indices; the colour of u, if any, is dropped
    :return: (extended colouring or None, trace); trace.outcome is the colour given to u or FAILED
    """
    if c.n != g.n:
        raise ValueError("colouring has {} entries for a graph on {} vertices".format(c.n, g.n))
    g._check_vertex(u)
    check_proper(g, c, ignore=u)
    if not c.is_total(ignore=u):
        raise ValueError("colouring of G-u is not total")
    c = c.with_colors({u: UNASSIGNED})
    top = max(c.assignment, default=0)
    if top > k:
        raise ValueError("colouring uses colour {} beyond k={}".format(top, k))
    c = c.with_palette(k)
    trace = TacticTrace(u, c)

    if _free_color_at(g, c, u) is not None:
        return _finish(trace, g, c, u, STAGE_DIRECT), trace

    for v in iter_bits(g.adj[u]):
        step = _recolor_step(g, c, u, v)
        if step is None:
            continue
        recolored = _apply(c, step)
        if _free_color_at(g, recolored, u) is not None:
            trace.add(step)
            return _finish(trace, g, recolored, u, STAGE_FREE_COLOR), trace

    steps = _cascade_search(g, c, u, depth, max_states) if depth >= 1 else None
    if steps is not None:
        for step in steps:
            trace.add(step)
            c = _apply(c, step)
        return _finish(trace, g, c, u, STAGE_CASCADE), trace

    trace.stage = STAGE_CASCADE if depth >= 1 else STAGE_FREE_COLOR
    return None, trace


class _BkRun(object):
    def __init__(self, tactic_depth: int, max_states: int, min_delta: int):
        self.tactic_depth = tactic_depth
        self.max_states = max_states
        self.min_delta = min_delta
        self.extensions = []  # type: List[ExtensionRecord]
        self.traces = []  # type: List[TacticTrace]

    def color(self, g: Graph) -> Coloring:
        delta = g.max_degree()
        if delta < self.min_delta:
            return color_components(g)
        omega, _ = clique_number(g)
        if omega >= delta:
            _, coloring = chromatic_number(g)
            return coloring

        degrees = g.degrees()
        u = degrees.index(delta)
        sub = self.color(g.delete_vertex(u))
        lifted = Coloring(sub.assignment[:u] + (UNASSIGNED,) + sub.assignment[u:])
        k = delta - 1

        if lifted.num_colors > k:
            logger.warning("G-u already needs %d colours > k=%d at n=%d; using exact solver", lifted.num_colors, k, g.n)
            self.extensions.append(ExtensionRecord(u, g.n, delta, k, "fallback", None))
            _, coloring = chromatic_number(g)
            return coloring

        extended, trace = extend_coloring(
            g, u, lifted.relabel_colors().with_palette(k), k, self.tactic_depth, self.max_states
        )
        self.traces.append(trace)
        if extended is not None:
            self.extensions.append(ExtensionRecord(u, g.n, delta, k, trace.stage, None))
            return extended

        launch = is_launch_configuration(palette_profile(g, trace.initial, u), delta)
        if not launch:
            logger.error("extension failed at u=%d (n=%d) without the launch configuration", u, g.n)
        self.extensions.append(ExtensionRecord(u, g.n, delta, k, "fallback", launch))
        _, coloring = chromatic_number(g)
        return coloring


def bk_color(
    g: Graph,
    tactic_depth: int = DEFAULT_TACTIC_DEPTH,
    max_states: int = DEFAULT_MAX_STATES,
    min_delta: int = MIN_DELTA,
) -> BkOutcome:
    """
    Colours a 4K1-free graph with max degree >= min_delta using at most max(Delta-1, omega) colours.
    Recursion: strip the lowest-index maximum-degree vertex u, colour G-u, extend to u; graphs with
    Delta < min_delta are coloured component-wise (Brooks), graphs with omega >= Delta exactly.
    """
    if g.n > EXACT_SOLVER_MAX_VERTICES:
        raise ScopeError("bk_color is limited to {} vertices, got {}".format(EXACT_SOLVER_MAX_VERTICES, g.n))
    delta = g.max_degree()
    if delta < min_delta:
        raise PreconditionError("max degree {} is below {}".format(delta, min_delta))
    if not is_4k1_free(g):
        raise PreconditionError("graph is not 4K1-free")

    run = _BkRun(tactic_depth, max_states, min_delta)
    coloring = run.color(g)
    assert is_proper(g, coloring) and coloring.is_total(), "bk_color produced an improper colouring"

    omega, _ = clique_number(g)
    bound = max(delta - 1, omega)
    coloring = coloring.relabel_colors()
    within = coloring.num_colors <= bound
    if not within:
        logger.error("bound violated: %d colours > max(Delta-1, omega) = %d", coloring.num_colors, bound)

    attempts = len(run.traces)
    successes = sum(1 for t in run.traces if t.outcome != FAILED)
    if not run.extensions:
        outcome = "exact"
    elif any(e.stage == "fallback" for e in run.extensions):
        outcome = "fallback"
    else:
        outcome = "tactic"
    return BkOutcome(
        coloring,
        bound,
        within,
        run.extensions,
        run.traces,
        successes / attempts if attempts else None,
        outcome,
    )
