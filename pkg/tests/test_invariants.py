import networkx as nx
import pytest

from mltalgo.generators import (
    complete,
    complete_bipartite,
    cycle,
    grid,
    grotzsch,
    octahedron,
    path,
)
from mltalgo.graph_core import Graph
from mltalgo.invariants import (
    canonical_cycle,
    chordless_cycles,
    chromatic_number,
    clique_number,
    elimination_width,
    is_chordal,
    max_clique,
    treewidth_upper,
)
from mltalgo.mlt_config import Exactness, Options


def test_max_clique():
    res = max_clique(octahedron())
    assert res.size == 3
    assert res.exactness == Exactness.Exact
    G = octahedron()
    a, b, c = res.clique
    assert G.has_edge(a, b) and G.has_edge(a, c) and G.has_edge(b, c)
    assert clique_number(Graph(3)) == 1
    assert clique_number(Graph(0)) == 0


def test_max_clique_capped():
    options = Options()
    options.clique_cap = 3
    res = max_clique(complete(5), options)
    assert res.exactness == Exactness.LowerBoundOnly
    assert res.size >= 1


def test_is_chordal():
    chordal, peo = is_chordal(complete(4))
    assert chordal and sorted(peo) == [0, 1, 2, 3]
    assert is_chordal(path(6))[0]
    assert not is_chordal(cycle(5))[0]
    assert not is_chordal(grid(3, 3))[0]


def test_chordal_agrees_with_networkx(atlas6):
    for G in atlas6:
        assert is_chordal(G)[0] == nx.is_chordal(G.to_networkx())


def test_treewidth_upper():
    assert treewidth_upper(path(5))[0] == 1
    assert treewidth_upper(cycle(6))[0] == 2
    assert treewidth_upper(complete(5))[0] == 4
    assert treewidth_upper(grid(3, 3))[0] == 3
    assert treewidth_upper(complete_bipartite(3, 3))[0] == 3
    width, ordering = treewidth_upper(grid(2, 5))
    assert width == 2
    assert elimination_width(grid(2, 5), ordering) == width


def test_treewidth_exact_on_chordal(atlas6):
    for G in atlas6:
        chordal, _ = is_chordal(G)
        if chordal and G.num_edges > 0:
            assert treewidth_upper(G)[0] == clique_number(G) - 1


def test_chromatic_number():
    assert chromatic_number(cycle(5)).colors_used == 3
    assert chromatic_number(cycle(6)).colors_used == 2
    assert chromatic_number(octahedron()).colors_used == 3
    res = chromatic_number(grotzsch())
    assert res.colors_used == 4
    assert res.exactness == Exactness.Exact
    G = grotzsch()
    assert all(res.coloring[u] != res.coloring[v] for u, v in G.edges)


def test_chromatic_capped():
    options = Options()
    options.chromatic_cap = 4
    res = chromatic_number(cycle(7), options)
    assert res.exactness == Exactness.UpperBoundOnly
    assert res.colors_used >= 3


def test_canonical_cycle():
    assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
    assert canonical_cycle((2, 0, 3, 1)) == (0, 2, 1, 3)
    assert canonical_cycle((0, 3, 2, 1)) == (0, 1, 2, 3)


def test_chordless_cycles():
    res = chordless_cycles(cycle(5))
    assert res.complete
    assert res.cycles == [(0, 1, 2, 3, 4)]
    assert len(chordless_cycles(octahedron()).cycles) == 11
    assert chordless_cycles(path(4)).cycles == []


def test_chordless_cycles_budget():
    options = Options()
    options.cycle_budget = 2
    res = chordless_cycles(complete(5), options=options)
    assert not res.complete
    assert len(res.cycles) == 2
