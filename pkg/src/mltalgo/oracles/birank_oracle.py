"""
BirankOracle

For a bipartite graph B between V1 (m1 vertices) and V2 (m2 vertices) and
integers r1, r2, consider generic matrices X (m1 x r1) and Y (r2 x m2) and the
linear space

    L = { X A + B Y : A is r1 x m2, B is m1 x r2 }

of m1 x m2 matrices. The pair (r1, r2) belongs to birank(B) when the projection
of L onto the entries indexed by the edges of B is onto.

The projection is linear in (A, B). Its matrix has one row per edge and
r1*m2 + m1*r2 columns: A-columns are grouped by the column j of A they belong
to (column ``j * r1 + t`` for entry A_tj) and B-columns by the row i of B
(column ``r1 * m2 + i * r2 + s`` for entry B_is). Since
(XA + BY)_ij = sum_t X_it A_tj + sum_s B_is Y_sj, the row of edge (i, j) carries
row i of X in the A-columns of j and column j of Y in the B-columns of i.
Membership is equivalent to this matrix having full row rank #E at generic X, Y.

A combinatorial certificate comes first: repeatedly delete V1 vertices of
degree <= r2 and V2 vertices of degree <= r1. If this (r1, r2)-core is empty the
pair is a member, because adding a V1 vertex with at most r2 edges (or a V2
vertex with at most r1 edges) preserves membership.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import numpy as np

from mltalgo.ff_matrix import PrimeFieldMatrix, RandomSource, ff_rank
from mltalgo.graph_core import BipartiteGraph
from mltalgo.mlt_config import BirankMethod, GraphError, Options

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BirankResult:
    member: bool
    method: BirankMethod
    generic_rank: Optional[int] = None  # filled by the generic test only
    seeds: List[int] = field(default_factory=list)


def bipartite_core(B: BipartiteGraph, r1: int, r2: int) -> BipartiteGraph:
    """
    The function `bipartite_core` computes the (r1, r2)-core of B.

    The result does not depend on the order in which vertices are deleted.

    Examples:
        >>> C6 = BipartiteGraph([0, 2, 4], [1, 3, 5], [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (0, 5)])
        >>> bipartite_core(C6, 1, 1) == C6
        True
    """
    if r1 < 0 or r2 < 0:
        raise ValueError(f"core parameters must be nonnegative, got ({r1}, {r2})")
    left, right = set(B.left), set(B.right)
    adj = {v: set() for v in B.left + B.right}
    for i, j in B.edges:
        adj[i].add(j)
        adj[j].add(i)

    def limit(v: int) -> int:
        return r2 if v in left else r1

    stack = [v for v in adj if len(adj[v]) <= limit(v)]
    removed = set()
    while stack:
        v = stack.pop()
        if v in removed:
            continue
        removed.add(v)
        for w in adj[v]:
            adj[w].discard(v)
            if w not in removed and len(adj[w]) <= limit(w):
                stack.append(w)
        adj[v] = set()
    kept_left = left - removed
    kept_right = right - removed
    return BipartiteGraph(
        kept_left,
        kept_right,
        [(i, j) for i, j in B.edges if i in kept_left and j in kept_right],
    )


def birank_matrix_at(
    B: BipartiteGraph, X: np.ndarray, Y: np.ndarray, p: int = Options.prime
) -> PrimeFieldMatrix:
    """Projection matrix of (A, B) -> XA + BY onto the edge entries."""
    r1 = X.shape[1]
    r2 = Y.shape[0]
    a_cols = r1 * B.m2
    data = np.zeros((B.num_edges, a_cols + B.m1 * r2), dtype=object)
    for row, (u, v) in enumerate(B.edges):
        i, j = B.left_index(u), B.right_index(v)
        data[row, j * r1 : (j + 1) * r1] = X[i, :]
        data[row, a_cols + i * r2 : a_cols + (i + 1) * r2] = Y[:, j]
    return PrimeFieldMatrix.from_array(data % p, p)


def birank_matrix(
    B: BipartiteGraph, r1: int, r2: int, rng: RandomSource, p: int = Options.prime
) -> PrimeFieldMatrix:
    X = rng.field_elements((B.m1, r1), p)
    Y = rng.field_elements((r2, B.m2), p)
    return birank_matrix_at(B, X, Y, p)


def birank_check(
    B: BipartiteGraph,
    r1: int,
    r2: int,
    trials: int = Options.trials,
    rng: Optional[RandomSource] = None,
    options=Options(),
) -> BirankResult:
    """
    The function `birank_check` decides whether (r1, r2) is in birank(B).

    An empty (r1, r2)-core settles membership without randomness; otherwise the
    generic projection matrix is evaluated ``trials`` times.

    Examples:
        >>> from mltalgo.generators import complete_bipartite
        >>> from mltalgo.graph_core import bipartite_between
        >>> K33 = bipartite_between(complete_bipartite(3, 3), [0, 1, 2], [3, 4, 5])
        >>> res = birank_check(K33, 1, 1)
        >>> res.member, res.method
        (False, <BirankMethod.Generic: 1>)
    """
    if r1 < 1 or r2 < 1:
        raise ValueError(f"birank targets must be at least 1, got ({r1}, {r2})")
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if bipartite_core(B, r1, r2).num_edges == 0:
        return BirankResult(True, BirankMethod.Core)
    if rng is None:
        rng = RandomSource(options.seed)
    best = 0
    seeds: List[int] = []
    for t in range(trials):
        if best == B.num_edges and t > 0:
            break
        sub = rng.spawn(t)
        seeds.append(sub.seed)
        best = max(best, ff_rank(birank_matrix(B, r1, r2, sub, options.prime)))
    _logger.debug("birank (%d,%d): generic rank %d of %d", r1, r2, best, B.num_edges)
    return BirankResult(best == B.num_edges, BirankMethod.Generic, best, seeds)


def birank_vertex_addition(
    B: BipartiteGraph, side: str, neighbors: Iterable[int], r1: int, r2: int
) -> BipartiteGraph:
    """
    The function `birank_vertex_addition` adds a new vertex to one side of B.

    A new V1 vertex may have at most r2 neighbors in V2 and a new V2 vertex at
    most r1 neighbors in V1; then (r1, r2) in birank(B) implies membership for
    the result. The new label is one more than the largest existing label.

    :param side: ``"left"`` or ``"right"``
    :raises GraphError: on too many neighbors or neighbors on the wrong side
    """
    nbrs = sorted(set(neighbors))
    new = max(B.left + B.right, default=-1) + 1
    if side == "left":
        if len(nbrs) > r2 or not set(nbrs) <= set(B.right):
            raise GraphError(f"a left vertex takes at most {r2} right neighbors")
        return BipartiteGraph(B.left + (new,), B.right, list(B.edges) + [(new, j) for j in nbrs])
    if side == "right":
        if len(nbrs) > r1 or not set(nbrs) <= set(B.left):
            raise GraphError(f"a right vertex takes at most {r1} left neighbors")
        return BipartiteGraph(B.left, B.right + (new,), list(B.edges) + [(i, new) for i in nbrs])
    raise GraphError(f"side must be 'left' or 'right', got {side!r}")
