import pytest
from hypothesis import given

from bk_lab.coloring.coloring import (
    UNASSIGNED,
    Coloring,
    ImproperColoringError,
    check_proper,
    dsatur_color,
    find_conflict,
    greedy_color,
    is_proper,
)
from bk_lab.graphs.graph import complete_bipartite, complete_graph, cycle_graph, from_edges, path_graph
from strategies import graphs


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring([1, 2, 3], k=2)
    with pytest.raises(ValueError):
        Coloring([1, -1])
    c = Coloring([1, 2, UNASSIGNED])
    assert c.k == 2
    assert c.num_colors == 2
    assert not c.is_total()
    assert c.is_total(ignore=2)


def test_coloring_is_immutable():
    c = Coloring([1, 2])
    with pytest.raises(AttributeError):
        c.k = 5
    d = c.with_colors({0: 3}, k=3)
    assert c.to_list() == [1, 2]
    assert d.to_list() == [3, 2]
    assert d.k == 3


def test_classes_and_relabel():
    c = Coloring([3, UNASSIGNED, 3, 1])
    assert {k: v.to_list() for k, v in c.classes().items()} == {1: [3], 3: [0, 2]}
    relabeled = c.relabel_colors()
    assert relabeled.to_list() == [1, UNASSIGNED, 1, 2]
    assert relabeled.k == 2
    assert c.class_bits(3) == 0b101


def test_neighbor_colors():
    star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    c = Coloring([UNASSIGNED, 1, 2, 2])
    assert c.neighbor_colors(star, 0) == 0b110
    assert c.neighbor_colors(star, 0, ignore=1) == 0b100


def test_find_conflict():
    g = path_graph(3)
    assert find_conflict(g, Coloring([1, 1, 2])) == (0, 1)
    assert find_conflict(g, Coloring([1, 1, 2]), ignore=1) is None
    assert find_conflict(g, Coloring([1, UNASSIGNED, 1])) is None
    with pytest.raises(ValueError):
        find_conflict(g, Coloring([1, 2]))


def test_check_proper_reports_edge_and_color():
    with pytest.raises(ImproperColoringError) as info:
        check_proper(cycle_graph(4), Coloring([1, 2, 2, 3]))
    assert info.value.edge == (1, 2)
    assert info.value.color == 2


def test_greedy_examples():
    assert greedy_color(cycle_graph(5), range(5)).to_list() == [1, 2, 1, 2, 3]
    assert greedy_color(complete_graph(4), [3, 2, 1, 0]).to_list() == [4, 3, 2, 1]
    with pytest.raises(ValueError):
        greedy_color(cycle_graph(5), [0, 1, 2])


@given(graphs())
def test_greedy_and_dsatur_are_proper(g):
    for c in (greedy_color(g, range(g.n)), dsatur_color(g)):
        assert is_proper(g, c)
        assert c.is_total()
        assert c.num_colors <= g.max_degree() + 1 or g.n == 0


@pytest.mark.parametrize("g", [cycle_graph(6), cycle_graph(10), complete_bipartite(3, 4), path_graph(7)])
def test_dsatur_two_colors_bipartite_graphs(g):
    assert dsatur_color(g).num_colors == 2


def test_dsatur_odd_cycle_and_clique():
    assert dsatur_color(cycle_graph(7)).num_colors == 3
    assert dsatur_color(complete_graph(6)).num_colors == 6
