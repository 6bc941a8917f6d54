import pytest
from hypothesis import given, settings, strategies as st

from nonsep.connectivity import is_k_connected, is_strongly_connected, kappa
from nonsep.errors import InputError
from nonsep.generators import (
    NAMED_FAMILY,
    circulant_graph,
    clique_chain,
    complete_bipartite,
    gen_random_digraph,
    gen_random_graph,
    named_graph,
    petersen_graph,
    wheel_graph,
)
from nonsep.graph import Digraph, format_edge_list, min_degree, semi_degree

# derived with an independent library
PETERSEN_EDGES = 15
WHEEL7_KAPPA = 3
K55_KAPPA = 5


def test_named_graphs():
    assert petersen_graph().num_edges() == PETERSEN_EDGES
    assert kappa(wheel_graph(7)) == WHEEL7_KAPPA
    assert kappa(complete_bipartite(5, 5)) == K55_KAPPA
    assert all(circulant_graph(13, [1, 2, 3, 4]).degree(v) == 8 for v in range(13))


@pytest.mark.parametrize("name", NAMED_FAMILY)
def test_named_family_parses(name):
    g = named_graph(name)
    assert g.n > 0
    assert isinstance(g, Digraph) == ("digraph" in name or "bicycle" in name)


@pytest.mark.parametrize("bad", ["", "hexagon", "complete", "complete:x", "bipartite:3", "circulant:9"])
def test_named_graph_errors(bad):
    with pytest.raises(InputError):
        named_graph(bad)


def test_gen_random_graph_example():
    g = gen_random_graph(8, 5, 2, seed=1)
    assert min_degree(g) >= 5 and is_k_connected(g, 2)


def test_gen_random_graph_infeasible():
    with pytest.raises(InputError):
        gen_random_graph(4, 5, 2, seed=0)
    with pytest.raises(InputError):
        gen_random_graph(5, 2, 5, seed=0)
    with pytest.raises(InputError):
        gen_random_digraph(4, 4, seed=0)


def test_generators_are_deterministic():
    a = gen_random_graph(20, 6, 2, seed=9, clusters=3)
    b = gen_random_graph(20, 6, 2, seed=9, clusters=3)
    assert format_edge_list(a) == format_edge_list(b)
    assert sorted(a.degree(v) for v in range(20)) == sorted(b.degree(v) for v in range(20))
    assert format_edge_list(gen_random_digraph(15, 4, 2, 2)) == format_edge_list(gen_random_digraph(15, 4, 2, 2))


@settings(max_examples=40)
@given(st.integers(3, 22), st.integers(0, 10 ** 6), st.integers(1, 3), st.data())
def test_gen_random_graph_contract(n, seed, clusters, data):
    delta = data.draw(st.integers(0, n - 1))
    k = data.draw(st.integers(0, min(3, n - 1)))
    g = gen_random_graph(n, delta, k, seed, clusters)
    assert g.n == n and min_degree(g) >= delta and is_k_connected(g, k)


@settings(max_examples=40)
@given(st.integers(2, 22), st.integers(0, 10 ** 6), st.integers(1, 3), st.data())
def test_gen_random_digraph_contract(n, seed, clusters, data):
    delta = data.draw(st.integers(0, n - 1))
    d = gen_random_digraph(n, delta, seed, clusters)
    assert d.n == n and semi_degree(d) >= delta and is_strongly_connected(d)


@pytest.mark.parametrize("sizes", [[4, 4], [5, 6, 5], [3, 3, 3, 3]])
def test_clique_chain_connectivity(sizes):
    assert kappa(clique_chain(sizes, seed=4)) == 2
    g = clique_chain(sizes, seed=4, cyclic=True)
    assert g.n == sum(sizes) and is_k_connected(g, 2)


def test_clique_chain_rejects_small_blocks():
    with pytest.raises(InputError):
        clique_chain([2, 5])
