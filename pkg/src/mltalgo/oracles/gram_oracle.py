"""
GramOracle

The symmetric minor matroid records which entries of a symmetric m x m matrix of
rank at most n are algebraically independent. Writing the matrix as PᵀP with
P an n x m matrix of columns p_1, ..., p_m, the entry σ_ij = <p_i, p_j> has
gradient p_j in block i and p_i in block j, and σ_ii has gradient 2 p_i in block
i. The Jacobian restricted to the diagonal entries and the edges of G has
(n*m) rows and (#V + #E) columns; it has full column rank at a generic P exactly
when rank(G) <= n.

Dropping the diagonal columns leaves a matroid isomorphic to the rigidity
matroid A(n - 1), so ``check_matroid_isomorphism`` compares both routes and is
used as a permanent cross-check of the rigidity oracle.
"""

from typing import List, Optional

import numpy as np

from mltalgo.ff_matrix import PrimeFieldMatrix, RandomSource, ff_rank
from mltalgo.graph_core import Graph
from mltalgo.mlt_config import Options
from mltalgo.mlt_typing import OracleIndep
from mltalgo.oracles.rigidity_oracle import IndependenceResult
from mltalgo.rigidity import is_independent


def gram_jacobian_at(G: Graph, points: np.ndarray, diag_scale: int = 2, p: Optional[int] = None):
    """
    The function `gram_jacobian_at` builds the (n*m) x (#V + #E) Jacobian of the
    diagonal and edge entries of PᵀP.

    Columns come in the order 00, 11, ..., (m-1)(m-1), then the edges of G in
    canonical order. ``points`` is n x m (column i is p_i). With ``p`` set the
    entries are residues and a ``PrimeFieldMatrix`` is returned; otherwise the
    points are real and a float array is returned.

    :param diag_scale: multiplier of p_i in diagonal columns (2 for the Jacobian,
        1 for the score matching coefficient matrix)

    Examples:
        >>> J = gram_jacobian_at(Graph(1), np.array([[3.0]]))
        >>> J.tolist()
        [[6.0]]
    """
    n, m = points.shape
    num_cols = m + G.num_edges
    if p is None:
        data = np.zeros((n * m, num_cols))
    else:
        data = np.zeros((n * m, num_cols), dtype=object)
    for i in range(m):
        data[i * n : (i + 1) * n, i] = diag_scale * points[:, i]
    for k, (i, j) in enumerate(G.edges):
        data[i * n : (i + 1) * n, m + k] = points[:, j]
        data[j * n : (j + 1) * n, m + k] = points[:, i]
    if p is None:
        return data
    return PrimeFieldMatrix.from_array(data % p, p)


def gram_jacobian(G: Graph, n: int, rng: RandomSource, p: int = Options.prime) -> PrimeFieldMatrix:
    if n < 1:
        raise ValueError(f"inner dimension must be at least 1, got {n}")
    return gram_jacobian_at(G, rng.field_elements((n, G.m), p), 2, p)


def is_independent_sym(
    G: Graph,
    n: int,
    trials: int = Options.trials,
    rng: Optional[RandomSource] = None,
    options=Options(),
) -> IndependenceResult:
    """
    The function `is_independent_sym` tests whether the diagonal together with
    E(G) is independent in the symmetric minor matroid of rank n.

    Examples:
        >>> from mltalgo.generators import cycle, complete
        >>> is_independent_sym(cycle(4), 3).generic_rank
        8
        >>> is_independent_sym(complete(4), 3).generic_rank
        9
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if rng is None:
        rng = RandomSource(options.seed)
    size = G.m + G.num_edges
    best = 0
    seeds: List[int] = []
    for t in range(trials):
        if best == size and t > 0:
            break
        sub = rng.spawn(t)
        seeds.append(sub.seed)
        best = max(best, ff_rank(gram_jacobian(G, n, sub, options.prime)))
    return IndependenceResult(best == size, best, size, len(seeds), seeds, options.prime)


def check_matroid_isomorphism(G: Graph, n: int, options=Options()) -> bool:
    """True iff the symmetric-minor and rigidity routes agree on rank(G) <= n."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    sym = is_independent_sym(G, n, options.trials, None, options).independent
    return sym == is_independent(G, n - 1, options)


class GramOracle(OracleIndep):
    """Independence in A(d) through the symmetric minor matroid of rank d + 1"""

    def __init__(self, G: Graph, options=Options()) -> None:
        self.G = G
        self.options = options

    def assess_indep(self, dim: int) -> bool:
        return is_independent_sym(
            self.G, dim + 1, self.options.trials, None, self.options
        ).independent
