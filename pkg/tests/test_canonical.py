import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from bk_lab.graphs.canonical import are_isomorphic, canonical_form
from bk_lab.graphs.graph import complete_bipartite, cycle_graph, empty_graph, from_edges, path_graph, petersen_graph
from bk_lab.graphs.graph6 import parse_graph6
from strategies import graphs


def test_empty_graph():
    labeling = canonical_form(empty_graph(0))
    assert labeling.certificate == "?"
    assert labeling.labeling == []


def test_labeling_maps_onto_canonical_graph():
    g = from_edges(5, [(0, 3), (3, 4), (1, 2)])
    labeling = canonical_form(g)
    assert sorted(labeling.labeling) == list(range(5))
    assert g.relabel(labeling.labeling) == labeling.graph
    assert parse_graph6(labeling.certificate) == labeling.graph


@settings(deadline=None)
@given(graphs(max_n=9), st.data())
def test_certificate_is_invariant_under_relabeling(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_form(g.relabel(perm)).certificate == canonical_form(g).certificate


@settings(deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_matches_networkx(g, h):
    expected = g.n == h.n and nx.is_isomorphic(g.to_networkx(), h.to_networkx())
    assert are_isomorphic(g, h) == expected


def test_regular_graphs():
    assert are_isomorphic(petersen_graph(), petersen_graph().relabel([9, 8, 7, 6, 5, 4, 3, 2, 1, 0]))
    # both 3-regular on 6 vertices
    prism = from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    assert not are_isomorphic(complete_bipartite(3, 3), prism)
    assert not are_isomorphic(cycle_graph(6), from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    assert not are_isomorphic(path_graph(4), cycle_graph(4))
