import pytest

from mltalgo.generators import complete, complete_bipartite, cycle, grid, grotzsch, path
from mltalgo.graph_core import Graph
from mltalgo.invariants import chromatic_number, clique_number
from mltalgo.mlt_config import GraphError, Options, UnverifiedBoundError, Verdict
from mltalgo.mlt_engine import mlt_bounds
from mltalgo.wmlt import (
    CyclicOrdering,
    buhl_cycle_condition,
    verified_wmlt_upper,
    verify_buhl_witness,
    wmlt_bounds,
    wmlt_split_bound,
    wmlt_split_search,
)


def test_cyclic_ordering():
    order = CyclicOrdering([2, 0, 3, 1])
    assert order.order == (0, 3, 1, 2)
    assert order == CyclicOrdering([1, 2, 0, 3])
    assert order.m == 4
    assert order.restrict([1, 2, 3]) == (3, 1, 2)
    assert repr(order) == "CyclicOrdering([0, 3, 1, 2])"
    with pytest.raises(GraphError):
        CyclicOrdering([0, 2])


@pytest.mark.parametrize("k", range(4, 9))
def test_long_cycles(k):
    report = wmlt_bounds(cycle(k))
    assert report.exact == 2


def test_triangle():
    report = wmlt_bounds(cycle(3))
    assert report.exact == 3
    assert report.certificates[0].witness["triangle"]


def test_edgeless():
    assert wmlt_bounds(Graph(5)).exact == 1
    assert verified_wmlt_upper(Graph(3)) == 1


def test_grotzsch():
    G = grotzsch()
    report = wmlt_bounds(G)
    assert (report.lower, report.upper) == (2, 3)
    buhl = next(c for c in report.certificates if c.method == "buhl")
    assert buhl.witness["verdict"] == "satisfied"
    assert verify_buhl_witness(G, CyclicOrdering(buhl.witness["ordering"]))
    assert buhl.witness["strict_verdict"] == "unchecked"
    assert report.notes[0].startswith("cycle condition satisfied")


def test_grotzsch_fails_when_reflections_forbidden():
    options = Options()
    options.buhl_cap = 11  # complete search on all 11 vertices
    report = wmlt_bounds(grotzsch(), options)
    buhl = next(c for c in report.certificates if c.method == "buhl")
    assert buhl.witness["verdict"] == "satisfied"
    assert buhl.witness["strict_verdict"] == "unsatisfied"
    assert "no ordering avoids the reflected cycle orders as well" in report.notes
    assert not verify_buhl_witness(
        grotzsch(), CyclicOrdering(buhl.witness["ordering"]), strict=True
    )


def test_buhl_grotzsch_found_by_search():
    # chromatic number 4, so the color block shortcut does not apply
    res = buhl_cycle_condition(grotzsch())
    assert res.verdict == Verdict.Satisfied
    assert res.nodes > 0
    assert verify_buhl_witness(grotzsch(), res.witness)


def test_buhl_c4_witness():
    res = buhl_cycle_condition(cycle(4))
    assert res.verdict == Verdict.Satisfied
    assert res.witness == CyclicOrdering([0, 2, 1, 3])
    assert verify_buhl_witness(cycle(4), res.witness)
    assert not verify_buhl_witness(cycle(4), CyclicOrdering([0, 1, 2, 3]))
    # a reflection of the cycle order repeats it only under the strict reading
    assert verify_buhl_witness(cycle(4), CyclicOrdering([0, 3, 2, 1]))
    assert not verify_buhl_witness(cycle(4), CyclicOrdering([0, 3, 2, 1]), strict=True)
    res = buhl_cycle_condition(cycle(4), strict=True)
    assert res.verdict == Verdict.Satisfied
    assert verify_buhl_witness(cycle(4), res.witness, strict=True)


def test_buhl_triangles():
    assert buhl_cycle_condition(complete(3)).verdict == Verdict.Unsatisfied
    assert buhl_cycle_condition(complete(4)).verdict == Verdict.Unsatisfied
    assert buhl_cycle_condition(complete(3), strict=True).verdict == Verdict.Unsatisfied
    assert buhl_cycle_condition(complete_bipartite(1, 3)).verdict == Verdict.Satisfied


@pytest.mark.parametrize("G", [cycle(5), cycle(7), grid(3, 3), path(4)])
def test_buhl_triangle_free_three_colorable(G):
    res = buhl_cycle_condition(G)
    assert res.verdict == Verdict.Satisfied
    assert verify_buhl_witness(G, res.witness)


def test_verify_size_mismatch():
    with pytest.raises(GraphError):
        verify_buhl_witness(cycle(5), CyclicOrdering([0, 1, 2]))


def test_verified_wmlt_upper():
    assert verified_wmlt_upper(path(5)) == 2
    assert verified_wmlt_upper(cycle(5)) == 2
    assert verified_wmlt_upper(complete(4)) == 4
    # triangle plus a pentagon
    G = Graph(8, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)])
    assert verified_wmlt_upper(G) == 3


def test_wmlt_split_bound():
    G = grotzsch()
    assert wmlt_split_bound(G, [[5, 6, 7, 8, 9], [0, 1, 2, 3, 4, 10]], [1, 2]) == 3
    with pytest.raises(UnverifiedBoundError) as exc:
        wmlt_split_bound(G, [list(range(11))], [3])
    assert str(exc.value) == "part 0: target 3 is below the verified bound 4"
    with pytest.raises(GraphError):
        wmlt_split_bound(G, [list(range(11))], [4, 1])
    with pytest.raises(GraphError):
        wmlt_split_bound(G, [list(range(11))], [0])
    with pytest.raises(GraphError):
        wmlt_split_bound(G, [list(range(10))], [4])


def test_wmlt_split_search():
    split = wmlt_split_search(grotzsch())
    assert split.bound == 3
    assert split.targets[0] == 1
    assert wmlt_split_search(Graph(0)) is None
    assert wmlt_split_search(cycle(6)).bound == 2
    options = Options()
    options.independent_set_budget = 0
    whole = wmlt_split_search(grotzsch(), options)
    assert whole.parts == [tuple(range(11))]
    assert whole.targets == [verified_wmlt_upper(grotzsch())] == [whole.bound]


def test_wmlt_below_mlt(atlas6):
    for G in atlas6:
        report = wmlt_bounds(G)
        assert report.lower <= report.upper <= mlt_bounds(G).upper


def test_split_trivial_partitions():
    G = grid(2, 3)
    left = [v for v in G.vertices() if (v // 3 + v % 3) % 2 == 0]
    right = [v for v in G.vertices() if v not in left]
    assert wmlt_split_bound(G, [left, right], [1, 1]) == 2
    singletons = [[v] for v in G.vertices()]
    assert wmlt_split_bound(G, singletons, [1] * G.m) == G.m


def test_buhl_color_blocks_agree(atlas7):
    for G in atlas7:
        if G.num_edges == 0 or clique_number(G) >= 3:
            continue
        if chromatic_number(G).colors_used <= 3:
            res = buhl_cycle_condition(G)
            assert res.verdict == Verdict.Satisfied
            assert verify_buhl_witness(G, res.witness)
