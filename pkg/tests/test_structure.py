import networkx as nx
import pytest
from hypothesis import given, settings

from bk_lab.graphs.graph import (
    VertexSet,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edges,
    path_graph,
    petersen_graph,
)
from bk_lab.graphs.structure import (
    clique_number,
    has_clique,
    has_independent_set,
    independence_number,
    is_4k1_free,
    is_clique,
    is_complete,
    is_independent,
    is_odd_cycle,
    structure_summary,
)
from strategies import brute_alpha, brute_omega, graphs


@pytest.mark.parametrize(
    "g,alpha,omega",
    [
        (empty_graph(0), 0, 0),
        (empty_graph(1), 1, 1),
        (complete_graph(4), 1, 4),
        (empty_graph(4), 4, 1),
        (cycle_graph(5), 2, 2),
        (cycle_graph(7), 3, 2),
        (petersen_graph(), 4, 2),
        (complete_bipartite(3, 3), 3, 2),
        (complete_graph(10), 1, 10),
    ],
)
def test_known_parameters(g, alpha, omega):
    assert independence_number(g)[0] == alpha
    assert clique_number(g)[0] == omega


def test_witnesses_are_lexicographically_first():
    assert clique_number(complete_graph(4))[1] == VertexSet.of([0, 1, 2, 3])
    assert independence_number(empty_graph(4))[1] == VertexSet.of([0, 1, 2, 3])
    assert independence_number(cycle_graph(5))[1] == VertexSet.of([0, 2])
    assert clique_number(cycle_graph(5))[1] == VertexSet.of([0, 1])


def test_4k1_free_examples():
    assert is_4k1_free(complete_graph(4))
    assert is_4k1_free(cycle_graph(5))
    assert is_4k1_free(cycle_graph(7))
    assert not is_4k1_free(empty_graph(4))
    assert not is_4k1_free(petersen_graph())
    assert not is_4k1_free(cycle_graph(9))
    assert is_4k1_free(cycle_graph(9).complement())


@given(graphs())
def test_parameters_match_brute_force(g):
    alpha, independent = independence_number(g)
    omega, clique = clique_number(g)
    assert alpha == brute_alpha(g)
    assert omega == brute_omega(g)
    assert len(independent) == alpha and is_independent(g, independent)
    assert len(clique) == omega and is_clique(g, clique)
    assert is_4k1_free(g) == (alpha <= 3)


@settings(deadline=None)
@given(graphs(max_n=14))
def test_clique_number_matches_networkx(g):
    nxg = g.to_networkx()
    expected = max((len(c) for c in nx.find_cliques(nxg)), default=0)
    assert clique_number(g)[0] == expected
    assert independence_number(g)[0] == clique_number(g.complement())[0]


@given(graphs(max_n=9))
def test_has_clique_thresholds(g):
    omega = clique_number(g)[0]
    alpha = independence_number(g)[0]
    assert has_clique(g, 0)
    assert has_clique(g, omega)
    assert not has_clique(g, omega + 1)
    assert has_independent_set(g, alpha)
    assert not has_independent_set(g, alpha + 1)


def test_brooks_exceptions():
    assert is_complete(complete_graph(5))
    assert is_complete(empty_graph(1))
    assert not is_complete(cycle_graph(5))
    assert is_odd_cycle(cycle_graph(5))
    assert is_odd_cycle(cycle_graph(3))
    assert not is_odd_cycle(cycle_graph(6))
    assert not is_odd_cycle(path_graph(5))
    # triangle plus square: 2-regular on 7 vertices, disconnected
    assert not is_odd_cycle(from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]))


def test_structure_summary():
    summary = structure_summary(cycle_graph(9).complement())
    assert summary.alpha == 2
    assert summary.omega == 4
    assert summary.is_4k1_free
    assert is_clique(cycle_graph(9).complement(), summary.witness_clique)
