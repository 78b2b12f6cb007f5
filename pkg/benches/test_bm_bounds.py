# -*- coding: utf-8 -*-
from mltalgo.cores_splitting import search_splitting
from mltalgo.generators import grid, grotzsch, octahedron
from mltalgo.mlt_engine import mlt_bounds
from mltalgo.wmlt import wmlt_bounds


def test_bm_mlt_bounds_grid(benchmark):
    report = benchmark(mlt_bounds, grid(5, 5))
    assert report.exact == 3


def test_bm_search_splitting(benchmark):
    plan = benchmark(search_splitting, octahedron())
    assert plan.bound == 4


def test_bm_wmlt_bounds(benchmark):
    report = benchmark(wmlt_bounds, grotzsch())
    assert report.upper == 3
