import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bk_lab.coloring.coloring import UNASSIGNED, Coloring, PreconditionError, is_proper
from bk_lab.coloring.exact import ScopeError, chromatic_number
from bk_lab.graphs.graph import complete_graph, cycle_graph, empty_graph, from_edges
from bk_lab.graphs.structure import clique_number, is_4k1_free
from bk_lab.kempe.tactics import (
    ASSIGN_CENTER,
    FAILED,
    KEMPE_SWAP,
    NO_MOVE,
    RECOLOR,
    STAGE_CASCADE,
    STAGE_DIRECT,
    STAGE_FREE_COLOR,
    TacticStep,
    bk_color,
    extend_coloring,
    tactic_chain_cascade,
    tactic_free_color,
)
from strategies import coloring_without, graphs

STAR = from_edges(4, [(0, 1), (0, 2), (0, 3)])
STAR_WITH_TAIL = from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4)])
# A1=0, A2=1, X=2, Y=3, u=4: every 3-colouring of G-u shows all three colours on N(u)
LAUNCH = from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


def _apex_over_complement_of_c9():
    return cycle_graph(9).complement().add_apex()


def test_direct_extension():
    c = Coloring([UNASSIGNED, 1, 1, 1], k=2)
    extended, trace = extend_coloring(STAR, 0, c, 2)
    assert extended.to_list() == [2, 1, 1, 1]
    assert trace.stage == STAGE_DIRECT
    assert trace.outcome == 2
    assert trace.steps == [TacticStep(ASSIGN_CENTER, (0,), (UNASSIGNED,), (2,))]


def test_free_color_extension():
    c = Coloring([UNASSIGNED, 1, 2, 2], k=2)
    extended, trace = extend_coloring(STAR, 0, c, 2)
    assert extended.to_list() == [1, 2, 2, 2]
    assert trace.stage == STAGE_FREE_COLOR
    assert trace.steps == [
        TacticStep(RECOLOR, (1,), (1,), (2,)),
        TacticStep(ASSIGN_CENTER, (0,), (UNASSIGNED,), (1,)),
    ]
    assert trace.replay(STAR) == extended


def test_tactic_free_color():
    c = Coloring([UNASSIGNED, 1, 2, 2], k=2)
    assert tactic_free_color(STAR, c, 0, 1).to_list() == [UNASSIGNED, 2, 2, 2]
    blocked = Coloring([UNASSIGNED, 1, 2, 2, 2], k=2)
    assert tactic_free_color(STAR_WITH_TAIL, blocked, 0, 1) is NO_MOVE
    with pytest.raises(ValueError):
        tactic_free_color(STAR_WITH_TAIL, blocked, 0, 4)


def test_cascade_extension_swaps_a_chain():
    c = Coloring([UNASSIGNED, 1, 2, 2, 2], k=2)
    extended, trace = extend_coloring(STAR_WITH_TAIL, 0, c, 2)
    assert extended.to_list() == [1, 2, 2, 2, 1]
    assert trace.stage == STAGE_CASCADE
    assert trace.steps[0] == TacticStep(KEMPE_SWAP, (1, 4), (1, 2), (2, 1))
    assert trace.steps[-1].name == ASSIGN_CENTER
    assert trace.replay(STAR_WITH_TAIL) == extended
    assert is_proper(STAR_WITH_TAIL, extended)


def test_tactic_chain_cascade():
    c = Coloring([UNASSIGNED, 1, 2, 2, 2], k=2)
    assert tactic_chain_cascade(STAR_WITH_TAIL, c, 0, depth=1).to_list() == [UNASSIGNED, 2, 2, 2, 1]
    with pytest.raises(ValueError):
        tactic_chain_cascade(STAR_WITH_TAIL, c, 0, depth=0)


def test_depth_zero_disables_cascade():
    c = Coloring([UNASSIGNED, 1, 2, 2, 2], k=2)
    extended, trace = extend_coloring(STAR_WITH_TAIL, 0, c, 2, depth=0)
    assert extended is None
    assert trace.outcome == FAILED
    assert trace.stage == STAGE_FREE_COLOR


def test_failed_extension_in_launch_configuration():
    c = Coloring([1, 2, 3, 3, UNASSIGNED], k=3)
    extended, trace = extend_coloring(LAUNCH, 4, c, 3)
    assert extended is None
    assert trace.outcome == FAILED
    assert trace.stage == STAGE_CASCADE
    assert trace.steps == []
    assert tactic_chain_cascade(LAUNCH, c, 4) is NO_MOVE


def test_extend_coloring_rejects_bad_input():
    with pytest.raises(ValueError, match="entries"):
        extend_coloring(STAR, 0, Coloring([UNASSIGNED, 1, 2]), 2)
    with pytest.raises(ValueError, match="not total"):
        extend_coloring(STAR, 0, Coloring([UNASSIGNED, 1, UNASSIGNED, 2]), 2)
    with pytest.raises(ValueError, match="beyond"):
        extend_coloring(STAR, 0, Coloring([UNASSIGNED, 1, 2, 3]), 2)
    with pytest.raises(ValueError):
        extend_coloring(cycle_graph(4), 0, Coloring([UNASSIGNED, 1, 1, 2]), 2)


def test_trace_serialisation():
    c = Coloring([UNASSIGNED, 1, 2, 2], k=2)
    _, trace = extend_coloring(STAR, 0, c, 2)
    d = trace.to_dict()
    assert d["center"] == 0 and d["k"] == 2
    assert d["initial"] == [UNASSIGNED, 1, 2, 2]
    assert [s["name"] for s in d["steps"]] == [RECOLOR, ASSIGN_CENTER]
    lines = trace.to_lines()
    assert lines[0] == "center 0 k=2"
    assert lines[-1] == "outcome 1 stage=free_color"


def test_replay_detects_tampering():
    c = Coloring([UNASSIGNED, 1, 2, 2], k=2)
    _, trace = extend_coloring(STAR, 0, c, 2)
    trace.steps[0] = TacticStep(RECOLOR, (1,), (2,), (1,))
    with pytest.raises(ValueError):
        trace.replay()


def test_bk_color_apex_graph():
    g = _apex_over_complement_of_c9()
    outcome = bk_color(g, max_states=500)
    assert outcome.bound == 8
    assert outcome.within_bound
    assert outcome.tactic_outcome == "tactic"
    assert outcome.coloring.num_colors <= 7
    assert is_proper(g, outcome.coloring) and outcome.coloring.is_total()
    assert outcome.extensions[0].vertex == 9
    assert outcome.tactic_success_rate == 1.0
    assert chromatic_number(g)[0] == 6


def test_bk_color_clique_branch():
    outcome = bk_color(complete_graph(10))
    assert outcome.coloring.num_colors == 10
    assert outcome.bound == 10
    assert outcome.tactic_outcome == "exact"
    assert outcome.tactic_success_rate is None
    assert outcome.extensions == []


def test_bk_color_preconditions():
    with pytest.raises(PreconditionError, match="below 9"):
        bk_color(cycle_graph(5))
    with pytest.raises(PreconditionError, match="4K1-free"):
        bk_color(empty_graph(9).add_apex())
    with pytest.raises(ScopeError):
        bk_color(empty_graph(65))


def test_bk_color_min_delta_override():
    outcome = bk_color(cycle_graph(7).complement().add_apex(), min_delta=6, max_states=500)
    assert outcome.within_bound


def _dense_4k1_free_graphs(n, count, seed):
    rnd = random.Random(seed)
    found = []
    while len(found) < count:
        g = from_edges(n, [(v, w) for v in range(n) for w in range(v + 1, n) if rnd.random() < 0.75])
        if g.max_degree() >= 9 and is_4k1_free(g):
            found.append(g)
    return found


@pytest.mark.parametrize("n", [11, 12, 13])
def test_bk_color_on_random_graphs(n):
    for g in _dense_4k1_free_graphs(n, 3, seed=n):
        outcome = bk_color(g, max_states=500)
        assert is_proper(g, outcome.coloring) and outcome.coloring.is_total()
        assert outcome.bound == max(g.max_degree() - 1, clique_number(g)[0])
        assert outcome.within_bound
        for trace in outcome.traces:
            if trace.outcome != FAILED:
                assert trace.replay() == trace.final


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=8), st.data())
def test_extend_coloring_results_are_proper(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    c = coloring_without(g, u)
    k = max(c.num_colors, 1)
    extended, trace = extend_coloring(g, u, c, k, depth=2, max_states=300)
    if extended is None:
        assert trace.outcome == FAILED
        return
    assert is_proper(g, extended) and extended.is_total()
    assert max(extended.assignment) <= k
    assert trace.replay(g) == extended
