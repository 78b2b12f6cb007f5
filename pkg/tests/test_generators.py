import networkx as nx
import pytest

from mltalgo.generators import (
    complete,
    complete_bipartite,
    cycle,
    double_banana,
    generate_named,
    generator_names,
    grid,
    grotzsch,
    k4_pendant,
    octahedron,
    path,
    random_triangulation,
    torus_grid,
)
from mltalgo.graph_core import induced_subgraph
from mltalgo.mlt_config import GraphError


def test_basic_families():
    assert complete(5).num_edges == 10
    assert complete_bipartite(3, 3).num_edges == 9
    assert cycle(6).num_edges == 6
    assert path(4).edges == ((0, 1), (1, 2), (2, 3))
    with pytest.raises(GraphError):
        cycle(2)


def test_grid_labels():
    G = grid(2, 3)
    assert G.m == 6
    assert G.num_edges == 7
    # (0, 1) -> 1 and (1, 1) -> 4
    assert G.has_edge(1, 4)
    assert G.has_edge(3, 4)
    assert not G.has_edge(2, 3)


def test_torus_grid_regular():
    G = torus_grid(4, 3)
    assert G.m == 12
    assert G.num_edges == 24
    assert all(G.degree(v) == 4 for v in G.vertices())
    with pytest.raises(GraphError):
        torus_grid(1, 3)


def test_octahedron():
    G = octahedron()
    assert G.num_edges == 12
    assert not G.has_edge(0, 3)
    assert not G.has_edge(1, 2)
    assert not G.has_edge(4, 5)
    for part in ([0, 3, 4], [1, 2, 5]):
        H, _ = induced_subgraph(G, part)
        assert nx.is_isomorphic(H.to_networkx(), nx.path_graph(3))


def test_grotzsch():
    G = grotzsch()
    assert G.m == 11
    assert G.num_edges == 20
    g = G.to_networkx()
    assert nx.is_isomorphic(g, nx.mycielski_graph(4))
    assert all(G.has_edge(5 + i, 10) for i in range(5))
    assert G.has_edge(5, 1) and G.has_edge(5, 4)


def test_double_banana():
    G = double_banana()
    assert G.m == 8
    assert G.num_edges == 18
    assert not G.has_edge(0, 1)
    assert G.m + G.num_edges == 4 * G.m - 6


def test_k4_pendant():
    G = k4_pendant()
    assert G.m + G.num_edges == 12
    assert G.degree(4) == 1


@pytest.mark.parametrize("m", [3, 4, 7, 12])
def test_random_triangulation(m):
    G = random_triangulation(m, seed=m)
    assert G.num_edges == 3 * m - 6
    assert nx.check_planarity(G.to_networkx())[0]
    assert G == random_triangulation(m, seed=m)


def test_generate_named():
    assert generate_named("grid", [3, 3]) == grid(3, 3)
    assert generate_named("octahedron") == octahedron()
    assert generate_named("triangulation", [6]) == random_triangulation(6, 0)
    assert "torus_grid" in generator_names()
    with pytest.raises(GraphError):
        generate_named("petersen")
    with pytest.raises(GraphError):
        generate_named("grid", [3])
