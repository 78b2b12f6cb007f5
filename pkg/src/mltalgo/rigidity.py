"""
Rank of a graph through the generic rigidity matroid

rank(G) is the smallest n such that the edge set E is independent in the generic
rigidity matroid A(n - 1); an edgeless graph has rank 1. Independence is
monotone in the dimension, so ``rank_of_graph`` ascends n = 2, 3, ... and stops
at the first independent verdict. Dimensions 1 and 2 are decided exactly by the
pebble game; higher dimensions by the randomized generic rank.

The Laman count #E' <= #V'(n - 1) - C(n, 2) over all subgraphs with
#V' >= n - 1 is necessary for rank(G) <= n, so a violating subgraph certifies a
lower bound. Vertex addition and edge splitting (Henneberg moves) preserve
rank <= n and are provided as graph constructors.
"""

import logging
from math import comb
from typing import Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx

from .graph_core import Edge, Graph
from .mlt_config import GraphError, Options
from .mlt_typing import OracleIndep
from .oracles.pebble_oracle import PebbleOracle
from .oracles.rigidity_oracle import GenericRigidityOracle, generic_rank
from .threshold_search import IndepAdaptor, linear_search

_logger = logging.getLogger(__name__)


class CountViolation(NamedTuple):
    vertices: Tuple[int, ...]
    num_edges: int
    bound: int


class LamanResult(NamedTuple):
    holds: bool
    violation: Optional[CountViolation]
    partial: bool  # True when only the full graph and maximal cliques were checked


def is_independent(G: Graph, d: int, options=Options()) -> bool:
    """
    The function `is_independent` tells whether E(G) is stress-free in dimension d,
    by randomized generic rank with ``options.trials`` evaluations.

    Examples:
        >>> from mltalgo.generators import cycle
        >>> is_independent(cycle(4), 1), is_independent(cycle(4), 2)
        (False, True)
    """
    return generic_rank(G, d, options.trials, None, options).independent


def laman_bound(size: int, n: int) -> int:
    return size * (n - 1) - comb(n, 2)


def laman_count_check(G: Graph, n: int, options=Options()) -> LamanResult:
    """
    The function `laman_count_check` looks for a vertex subset violating
    #E' <= #V'(n - 1) - C(n, 2).

    Up to ``options.subgraph_cap`` vertices all subsets of size at least n - 1 are
    examined (edge counts of induced subgraphs by dynamic programming over bit
    masks). Larger graphs are checked on the whole vertex set and on every maximal
    clique only, and the result is flagged partial. The reported violation has
    the largest excess, ties going to the smaller subset.

    :param n: rank being tested, at least 2

    Examples:
        >>> from mltalgo.generators import octahedron
        >>> laman_count_check(octahedron(), 3).violation
        CountViolation(vertices=(0, 1, 2, 3, 4, 5), num_edges=12, bound=9)
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    best: Optional[CountViolation] = None

    def consider(vertices: Tuple[int, ...], num_edges: int) -> None:
        nonlocal best
        if len(vertices) < n - 1:
            return
        bound = laman_bound(len(vertices), n)
        if num_edges <= bound:
            return
        cand = CountViolation(vertices, num_edges, bound)
        if best is None or (num_edges - bound, -len(vertices)) > (
            best.num_edges - best.bound,
            -len(best.vertices),
        ):
            best = cand

    if G.m <= options.subgraph_cap:
        masks = G.adjacency_masks()
        edges = [0] * (1 << G.m)
        for mask in range(1, 1 << G.m):
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            edges[mask] = edges[rest] + bin(masks[v] & rest).count("1")
            if edges[mask] > laman_bound(bin(mask).count("1"), n):
                consider(tuple(u for u in range(G.m) if mask >> u & 1), edges[mask])
        partial = False
    else:
        consider(tuple(G.vertices()), G.num_edges)
        for clique in nx.find_cliques(G.to_networkx()):
            size = len(clique)
            consider(tuple(sorted(clique)), comb(size, 2))
        partial = True
        _logger.debug("Laman count on %d vertices checked partially", G.m)
    return LamanResult(best is None, best, partial)


class RankOracle(OracleIndep):
    """Exact pebble game for dimensions 1 and 2, generic rank above"""

    def __init__(self, G: Graph, options=Options()) -> None:
        self.pebble = PebbleOracle(G)
        self.generic = GenericRigidityOracle(G, options)

    def assess_indep(self, dim: int) -> bool:
        if dim <= 2:
            return self.pebble.assess_indep(dim)
        return self.generic.assess_indep(dim)

    def seeds(self) -> List[int]:
        """Seeds of every generic evaluation made so far."""
        return sorted({s for res in self.generic.evidence.values() for s in res.seeds})


def rank_with_seeds(G: Graph, options=Options()) -> Tuple[int, List[int]]:
    """rank(G) with the seeds of the generic evaluations that decided it."""
    if G.num_edges == 0:
        return 1, []
    oracle = RankOracle(G, options)
    # K_m is independent in A(m - 1), so rank <= m
    rank, niter = linear_search(IndepAdaptor(oracle), (2, G.m))
    _logger.debug("rank %d after %d independence tests", rank, niter)
    return rank, oracle.seeds()


def rank_of_graph(G: Graph, options=Options()) -> int:
    """
    The function `rank_of_graph` returns the smallest n with E(G) independent in A(n - 1).

    Examples:
        >>> from mltalgo.generators import grid, octahedron, complete
        >>> rank_of_graph(grid(3, 3)), rank_of_graph(octahedron()), rank_of_graph(complete(5))
        (3, 4, 5)
    """
    return rank_with_seeds(G, options)[0]


def rank_at_most(G: Graph, r: int, options=Options()) -> bool:
    """True iff rank(G) <= r."""
    if r < 1:
        return False
    if r == 1:
        return G.num_edges == 0
    if r >= G.m:
        return True
    return RankOracle(G, options).assess_indep(r - 1)


def _require_rank(G: Graph, n: int, options: Options) -> None:
    if not rank_at_most(G, n, options):
        raise GraphError(f"graph has rank above {n}")


def vertex_addition(
    G: Graph, n: int, neighbors: Iterable[int], verify: bool = False, options=Options()
) -> Graph:
    """
    The function `vertex_addition` adds vertex m joined to at most n - 1 neighbors.

    If rank(G) <= n then the result has rank <= n. With ``verify`` the premise is
    checked first.

    :raises GraphError: on too many neighbors, an out-of-range neighbor, or a failed premise
    """
    nbrs = sorted(set(neighbors))
    if len(nbrs) > n - 1:
        raise GraphError(f"vertex addition at rank {n} allows {n - 1} neighbors, got {len(nbrs)}")
    if verify:
        _require_rank(G, n, options)
    new = G.m
    return Graph(G.m + 1, list(G.edges) + [(v, new) for v in nbrs])


def edge_split(
    G: Graph,
    n: int,
    e: Edge,
    extra: Iterable[int] = (),
    verify: bool = False,
    options=Options(),
) -> Graph:
    """
    The function `edge_split` replaces edge e = uv by a new vertex joined to u, v
    and at most n - 2 further vertices.

    :raises GraphError: when e is not an edge, or ``extra`` is too large or meets e
    """
    u, v = sorted(e)
    if not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    others = sorted(set(extra))
    if len(others) > n - 2:
        raise GraphError(f"edge split at rank {n} allows {n - 2} extra neighbors, got {len(others)}")
    if u in others or v in others:
        raise GraphError("extra neighbors must avoid the split edge")
    if verify:
        _require_rank(G, n, options)
    new = G.m
    edges: List[Edge] = [f for f in G.edges if f != (u, v)]
    edges += [(w, new) for w in [u, v] + others]
    return Graph(G.m + 1, edges)
