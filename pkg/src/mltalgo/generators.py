"""
Named graph generators

Every generator returns a canonical ``Graph`` on 0..m-1. Canonical vertex orders:

- ``grid(k1, k2)`` and ``torus_grid(k1, k2)``: vertex (i, j) with 0 <= i < k1,
  0 <= j < k2 has label ``i * k2 + j``.
- ``octahedron()``: K_{2,2,2} with antipodal (non-adjacent) pairs
  (0, 3), (1, 2), (4, 5). With this order the parts {0, 3, 4} and {1, 2, 5}
  both induce paths.
- ``grotzsch()``: Mycielskian of the 5-cycle 0-1-2-3-4; vertex 5 + i is the
  shadow of vertex i and vertex 10 is the apex joined to all shadows.
- ``double_banana()``: hinge vertices 0 and 1 (not adjacent); {0, 1, 2, 3, 4}
  and {0, 1, 5, 6, 7} each induce K5 minus the edge 01.
- ``k4_pendant()``: K4 on 0..3 plus vertex 4 joined to vertex 3.
"""

import logging
from typing import Callable, Dict, Sequence

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay

from .graph_core import Graph
from .mlt_config import GraphError

_logger = logging.getLogger(__name__)


def empty(m: int) -> Graph:
    return Graph(m)


def complete(m: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(m))


def complete_bipartite(m1: int, m2: int) -> Graph:
    return Graph.from_networkx(nx.complete_bipartite_graph(m1, m2))


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle length must be at least 3, got {k}")
    return Graph.from_networkx(nx.cycle_graph(k))


def path(k: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(k))


def _lattice(k1: int, k2: int, periodic: bool) -> Graph:
    if k1 < 2 or k2 < 2:
        raise GraphError(f"grid dimensions must be at least 2, got ({k1}, {k2})")
    g = nx.grid_2d_graph(k1, k2, periodic=periodic)
    return Graph(k1 * k2, ((a * k2 + b, c * k2 + d) for (a, b), (c, d) in g.edges()))


def grid(k1: int, k2: int) -> Graph:
    return _lattice(k1, k2, periodic=False)


def torus_grid(k1: int, k2: int) -> Graph:
    """Grid with both dimensions wrapped; 4-regular when k1, k2 >= 3."""
    return _lattice(k1, k2, periodic=True)


def octahedron() -> Graph:
    antipodes = {(0, 3), (1, 2), (4, 5)}
    return Graph(
        6,
        (
            (u, v)
            for u in range(6)
            for v in range(u + 1, 6)
            if (u, v) not in antipodes
        ),
    )


def grotzsch() -> Graph:
    return Graph.from_networkx(nx.mycielskian(nx.cycle_graph(5)))


def double_banana() -> Graph:
    edges = set()
    for wing in ((2, 3, 4), (5, 6, 7)):
        block = (0, 1) + wing
        for a in range(5):
            for b in range(a + 1, 5):
                if (block[a], block[b]) != (0, 1):
                    edges.add((block[a], block[b]))
    return Graph(8, edges)


def k4_pendant() -> Graph:
    return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])


def random_triangulation(m: int, seed: int = 0) -> Graph:
    """
    The function `random_triangulation` generates a maximal planar graph on m vertices.

    Three vertices span a fixed outer triangle; the remaining m - 3 are uniform
    points inside it. The Delaunay triangulation of the point set then has an
    outer face that is a triangle, hence 3m - 6 edges.

    :param m: number of vertices, at least 3
    :param seed: seed of the point sampler
    """
    if m < 3:
        raise GraphError(f"a triangulation needs at least 3 vertices, got {m}")
    rng = np.random.Generator(np.random.Philox(seed))
    outer = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, 1.0]])
    # barycentric sampling keeps interior points strictly inside
    weights = rng.dirichlet(np.ones(3), size=m - 3) * 0.98 + 0.02 / 3
    points = np.vstack([outer, weights @ outer])
    tri = Delaunay(points)
    edges = set()
    for simplex in tri.simplices:
        a, b, c = sorted(int(x) for x in simplex)
        edges.update({(a, b), (a, c), (b, c)})
    G = Graph(m, edges)
    if G.num_edges != 3 * m - 6 or not nx.check_planarity(G.to_networkx())[0]:
        raise GraphError(f"degenerate point set for seed {seed}")
    return G


_GENERATORS: Dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path,
    "grid": grid,
    "torus_grid": torus_grid,
    "octahedron": octahedron,
    "grotzsch": grotzsch,
    "double_banana": double_banana,
    "empty": empty,
    "k4_pendant": k4_pendant,
    "triangulation": random_triangulation,
}

_ARITY: Dict[str, Sequence[int]] = {
    "complete": (1,),
    "complete_bipartite": (2,),
    "cycle": (1,),
    "path": (1,),
    "grid": (2,),
    "torus_grid": (2,),
    "octahedron": (0,),
    "grotzsch": (0,),
    "double_banana": (0,),
    "empty": (1,),
    "k4_pendant": (0,),
    "triangulation": (1, 2),
}


def generator_names() -> Sequence[str]:
    return sorted(_GENERATORS)


def generate_named(name: str, params: Sequence[int] = ()) -> Graph:
    """
    The function `generate_named` builds a standard graph by name.

    :param name: one of :func:`generator_names`
    :param params: integer parameters of the construction
    :raises GraphError: on an unknown name or bad parameters

    Examples:
        >>> generate_named("grid", [2, 4]).num_edges
        10
        >>> generate_named("double_banana").num_edges
        18
    """
    if name not in _GENERATORS:
        raise GraphError(
            f"unknown generator {name!r}; choose from {', '.join(generator_names())}"
        )
    if len(params) not in _ARITY[name]:
        raise GraphError(
            f"{name} takes {' or '.join(map(str, _ARITY[name]))} parameter(s), got {len(params)}"
        )
    if any(p < 0 for p in params):
        raise GraphError(f"negative parameter for {name}")
    _logger.debug("generate %s%s", name, tuple(params))
    return _GENERATORS[name](*params)
