import pytest
from hypothesis import given
from hypothesis import strategies as st

from bk_lab.coloring.coloring import Coloring, dsatur_color, is_proper
from bk_lab.graphs.graph import VertexSet, path_graph
from bk_lab.kempe.chains import KempeChain, StaleChainError, kempe_chains, kempe_component, kempe_swap
from strategies import graphs


def test_component_example():
    g = path_graph(5)
    c = Coloring([1, 2, 1, 3, 1])
    chain = kempe_component(g, c, 0, 2, 1)
    assert chain.colors == (1, 2)
    assert chain.vertices == VertexSet.of([0, 1, 2])
    assert [ch.vertices.to_list() for ch in kempe_chains(g, c, 1, 2)] == [[0, 1, 2], [4]]


def test_component_argument_errors():
    g = path_graph(3)
    c = Coloring([1, 2, 3])
    with pytest.raises(ValueError):
        kempe_component(g, c, 0, 1, 1)
    with pytest.raises(ValueError):
        kempe_component(g, c, 2, 1, 2)


def test_swap_example():
    g = path_graph(5)
    c = Coloring([1, 2, 1, 3, 1])
    swapped = kempe_swap(g, c, kempe_component(g, c, 0, 1, 2))
    assert swapped.to_list() == [2, 1, 2, 3, 1]


def test_stale_chains():
    g = path_graph(3)
    c = Coloring([1, 2, 1])
    with pytest.raises(StaleChainError):
        kempe_swap(g, c, KempeChain((1, 2), VertexSet()))
    with pytest.raises(StaleChainError):
        kempe_swap(g, c, KempeChain((1, 2), VertexSet.of([0])))
    with pytest.raises(StaleChainError):
        kempe_swap(g, Coloring([1, 3, 1]), KempeChain((1, 2), VertexSet.of([0, 1, 2])))


@given(graphs(), st.integers(1, 4), st.integers(1, 4))
def test_chains_partition_two_colour_classes(g, i, j):
    if i == j:
        return
    c = dsatur_color(g)
    chains = kempe_chains(g, c, i, j)
    union = 0
    for chain in chains:
        assert not union & chain.vertices.bits
        union |= chain.vertices.bits
    assert union == c.class_bits(i) | c.class_bits(j)


@given(graphs(), st.integers(1, 4), st.integers(1, 4))
def test_swap_keeps_coloring_proper_and_is_an_involution(g, i, j):
    c = dsatur_color(g)
    if i == j or max(i, j) > c.k:
        return
    for chain in kempe_chains(g, c, i, j):
        swapped = kempe_swap(g, c, chain)
        assert is_proper(g, swapped)
        assert swapped.num_colors <= c.num_colors + 1
        assert kempe_swap(g, swapped, chain) == c
