"""
GenericRigidityOracle

This oracle answers "is the edge set of G independent in the generic rigidity
matroid A(d)?" by evaluating the rigidity matrix at random points over Z_p.

The rigidity matrix has one block of d rows per vertex and one column per edge.
The column of edge ij holds p_i - p_j in block i, p_j - p_i in block j and zeros
elsewhere (the factor 2 of the derivative of |p_i - p_j|^2 is dropped, which does
not change the rank). The edge set is independent, or stress-free, exactly when
the columns are linearly independent at a generic point.

Because a random specialization can only lose rank, ``generic_rank`` keeps the
maximum over its trials and stops early once the rank reaches #E. Whenever
m >= d + 1 the result is checked against the count d*m - C(d+1, 2), the
dimension of the space of non-trivial infinitesimal motions.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import List, Optional

import numpy as np

from mltalgo.ff_matrix import PrimeFieldMatrix, RandomSource, ff_rank
from mltalgo.graph_core import Graph
from mltalgo.mlt_config import Options
from mltalgo.mlt_typing import OracleIndep

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    generic_rank: int
    size: int  # number of columns that were tested
    trials: int
    seeds: List[int] = field(default_factory=list)
    prime: int = Options.prime


def rigidity_matrix_at(G: Graph, points: np.ndarray, p: int = Options.prime) -> PrimeFieldMatrix:
    """
    The function `rigidity_matrix_at` builds the (d*m) x #E rigidity matrix at
    the given point assignment.

    :param points: m x d object array of residues, row i is p_i

    Examples:
        >>> G = Graph(2, [(0, 1)])
        >>> M = rigidity_matrix_at(G, np.array([[5], [2]], dtype=object), 11)
        >>> [int(x) for x in M.data[:, 0]]
        [3, 8]
    """
    m, d = points.shape
    data = np.zeros((d * m, G.num_edges), dtype=object)
    for k, (i, j) in enumerate(G.edges):
        diff = (points[i] - points[j]) % p
        data[i * d : (i + 1) * d, k] = diff
        data[j * d : (j + 1) * d, k] = (-diff) % p
    return PrimeFieldMatrix.from_array(data, p)


def rigidity_matrix(
    G: Graph, d: int, rng: RandomSource, p: int = Options.prime
) -> PrimeFieldMatrix:
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")
    return rigidity_matrix_at(G, rng.field_elements((G.m, d), p), p)


def maxwell_bound(m: int, d: int) -> Optional[int]:
    """d*m - C(d+1, 2) when m >= d + 1, the rank ceiling of A(d) on m vertices."""
    return d * m - comb(d + 1, 2) if m >= d + 1 else None


def generic_rank(
    G: Graph,
    d: int,
    trials: int = Options.trials,
    rng: Optional[RandomSource] = None,
    options=Options(),
) -> IndependenceResult:
    """
    The function `generic_rank` estimates the rank of G's edge set in A(d).

    :param trials: number of random evaluations, at least 1
    :param rng: base random source; trial t uses ``rng.spawn(t)``

    Examples:
        >>> from mltalgo.generators import complete
        >>> res = generic_rank(complete(4), 2)
        >>> res.generic_rank, res.independent
        (5, False)
    """
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if rng is None:
        rng = RandomSource(options.seed)
    num_edges = G.num_edges
    best = 0
    seeds: List[int] = []
    for t in range(trials):
        if best == num_edges and t > 0:
            break
        sub = rng.spawn(t)
        seeds.append(sub.seed)
        rank = ff_rank(rigidity_matrix(G, d, sub, options.prime))
        _logger.debug("A(%d) trial %d seed %d: rank %d of %d", d, t, sub.seed, rank, num_edges)
        best = max(best, rank)
    bound = maxwell_bound(G.m, d)
    assert bound is None or best <= bound, "generic rank exceeds the Maxwell count"
    return IndependenceResult(
        best == num_edges, best, num_edges, len(seeds), seeds, options.prime
    )


class GenericRigidityOracle(OracleIndep):
    """Independence in A(d) by randomized generic rank"""

    def __init__(self, G: Graph, options=Options()) -> None:
        self.G = G
        self.options = options
        self.evidence: dict = {}

    def assess_indep(self, dim: int) -> bool:
        res = generic_rank(self.G, dim, self.options.trials, None, self.options)
        self.evidence[dim] = res
        return res.independent
