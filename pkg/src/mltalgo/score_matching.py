"""
Score matching estimator

For a Gaussian graphical model on G with sample covariance Σ₀ = PᵀP (P is the
n x m data matrix, rows are observations, the mean is taken to be zero), the
score matching estimator is the symmetric K supported on the diagonal and E(G)
solving the linear estimating equations

    ((K Σ₀ + Σ₀ K) / 2)_ij = δ_ij    for i = j and for ij in E(G).

It exists exactly when K = 0 is the only such K with K Pᵀ = 0, i.e. when the
coefficient matrix of K ↦ K Pᵀ restricted to the diagonal and the edges has full
column rank. That matrix is the Gram Jacobian at the data with diagonal columns
halved, so existence for generic data is the same question as independence in
the symmetric minor matroid, and the threshold smt(G) equals rank(G).

Existence on actual data is decided by numerical rank with a relative tolerance
(``Options.rank_tol``); normalizing Σ₀ by 1/n would not change the verdict.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Optional

import numpy as np

from .ff_matrix import RandomSource
from .graph_core import Graph
from .mlt_config import Options, SingularSystemError, SmeNonexistent
from .mlt_typing import OracleBS
from .oracles.gram_oracle import gram_jacobian_at
from .oracles.pebble_oracle import PebbleResult, pebble_game
from .real_matrix import real_rank, solve_dense
from .rigidity import laman_count_check, rank_of_graph
from .threshold_search import bsearch

_logger = logging.getLogger(__name__)


class SampleData:
    """n x m real data matrix P with covariance Σ₀ = PᵀP

    Examples:
        >>> data = SampleData(np.array([[1.0, 2.0], [0.0, 1.0]]))
        >>> data.n, data.m
        (2, 2)
        >>> data.covariance.tolist()
        [[1.0, 2.0], [2.0, 5.0]]
    """

    __slots__ = ("values",)

    def __init__(self, values) -> None:
        arr = np.array(values, dtype=float)
        if arr.ndim != 2:
            raise ValueError(f"data must be a two-dimensional array, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("data has non-finite entries")
        self.values: np.ndarray = arr

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]

    @property
    def covariance(self) -> np.ndarray:
        return self.values.T @ self.values

    @classmethod
    def from_csv(cls, source) -> "SampleData":
        """Reads n rows of m comma-separated floats, no header."""
        return cls(np.loadtxt(source, delimiter=",", ndmin=2))

    @classmethod
    def random(cls, n: int, m: int, rng: RandomSource) -> "SampleData":
        """Standard normal n x m data."""
        return cls(rng.normal((n, m)))

    @classmethod
    def from_covariance(cls, sigma, tol: float = Options.singular_tol) -> "SampleData":
        """
        Factors a positive semidefinite Σ₀ as PᵀP through its eigendecomposition;
        n is the number of eigenvalues above ``tol`` times the largest.

        :raises ValueError: when Σ₀ is not square, not symmetric within 1e-12, or
            has a clearly negative eigenvalue
        """
        S = np.array(sigma, dtype=float)
        if S.ndim != 2 or S.shape[0] != S.shape[1]:
            raise ValueError(f"covariance must be square, got shape {S.shape}")
        if not np.all(np.isfinite(S)) or np.max(np.abs(S - S.T), initial=0.0) > 1e-12:
            raise ValueError("covariance must be finite and symmetric")
        w, Q = np.linalg.eigh(S)
        scale = max(float(np.max(np.abs(w), initial=0.0)), 1.0)
        if np.min(w, initial=0.0) < -1e-9 * scale:
            raise ValueError("covariance is not positive semidefinite")
        keep = w > tol * scale
        return cls(np.sqrt(w[keep])[:, None] * Q[:, keep].T)


@dataclass
class SmeSystem:
    """Square linear system of the estimating equations

    Unknowns are K_00, ..., K_(m-1)(m-1) followed by K_ij for the edges of G in
    canonical order; equations come in the same order.
    """

    graph: Graph
    coefficients: np.ndarray
    rhs: np.ndarray

    def assemble(self, x: np.ndarray) -> np.ndarray:
        """The symmetric K holding the unknowns ``x``."""
        G = self.graph
        K = np.diag(x[: G.m]).astype(float)
        for k, (i, j) in enumerate(G.edges):
            K[i, j] = K[j, i] = x[G.m + k]
        return K


class SmeSolution(NamedTuple):
    K: np.ndarray
    residual: float  # max deviation of the projected equations from the identity


class ConjectureCheck(NamedTuple):
    predicted: bool
    actual: bool
    count: int  # #V + #E
    bound: int  # n*m - C(n, 2)


def sme_coefficient_matrix(G: Graph, data: SampleData) -> np.ndarray:
    """
    The function `sme_coefficient_matrix` returns the (n*m) x (#V + #E) matrix
    of K ↦ K Pᵀ on the diagonal and edge coordinates.

    Examples:
        >>> sme_coefficient_matrix(Graph(1), SampleData([[3.0]])).tolist()
        [[3.0]]
        >>> sme_coefficient_matrix(Graph(2, [(0, 1)]), SampleData([[1.0, 2.0]])).tolist()
        [[1.0, 0.0, 2.0], [0.0, 2.0, 1.0]]
    """
    if data.m != G.m:
        raise ValueError(f"data has {data.m} variables, graph has {G.m} vertices")
    return gram_jacobian_at(G, data.values, diag_scale=1)


def sme_exists(G: Graph, data: SampleData, options=Options()) -> bool:
    """True iff the score matching estimator exists for ``data``."""
    C = sme_coefficient_matrix(G, data)
    return real_rank(C, options.rank_tol) == G.m + G.num_edges


def sme_system(G: Graph, sigma: np.ndarray) -> SmeSystem:
    """
    The function `sme_system` writes the estimating equations for Σ₀ = ``sigma``.

    Row i (diagonal): σ_ii K_ii + sum over neighbors k of σ_ki K_ik = 1.
    Row ij (edge): half of σ_ij K_ii + σ_ji K_jj + sum over k ~ i of σ_kj K_ik
    + sum over k ~ j of σ_ki K_jk, which must vanish.
    """
    S = np.asarray(sigma, dtype=float)
    m = G.m
    index = {e: m + k for k, e in enumerate(G.edges)}

    def col(i: int, k: int) -> int:
        return index[(i, k) if i < k else (k, i)]

    size = m + G.num_edges
    A = np.zeros((size, size))
    b = np.zeros(size)
    for i in range(m):
        A[i, i] += S[i, i]
        for k in G.neighbors(i):
            A[i, col(i, k)] += S[k, i]
        b[i] = 1.0
    for (i, j), row in index.items():
        A[row, i] += 0.5 * S[i, j]
        A[row, j] += 0.5 * S[j, i]
        for k in G.neighbors(i):
            A[row, col(i, k)] += 0.5 * S[k, j]
        for k in G.neighbors(j):
            A[row, col(j, k)] += 0.5 * S[k, i]
    return SmeSystem(G, A, b)


def _projected_residual(G: Graph, K: np.ndarray, S: np.ndarray) -> float:
    R = (K @ S + S @ K) / 2 - np.eye(G.m)
    coords = [R[i, i] for i in range(G.m)] + [R[i, j] for i, j in G.edges]
    return float(np.max(np.abs(coords), initial=0.0))


def sme_solve(G: Graph, data: SampleData, options=Options()) -> SmeSolution:
    """
    The function `sme_solve` computes the score matching estimate K.

    The equations are solved for Σ₀ scaled to unit largest entry and K is scaled
    back, so the outcome does not depend on the units of the data.

    :raises SmeNonexistent: when the estimator does not exist for ``data`` or the
        scaled system is singular
    :raises SingularSystemError: when the solution misses the equations by more
        than 1e-8 * max(1, ‖Σ₀‖∞)

    Examples:
        >>> sol = sme_solve(Graph(2), SampleData([[2.0, 0.0], [0.0, 4.0]]))
        >>> sol.K.tolist()
        [[0.25, 0.0], [0.0, 0.0625]]
    """
    if not sme_exists(G, data, options):
        raise SmeNonexistent(f"SME does not exist for n = {data.n} on this graph")
    S = data.covariance
    unit = float(np.max(np.abs(S), initial=0.0)) or 1.0
    system = sme_system(G, S / unit)
    try:
        x = solve_dense(system.coefficients, system.rhs, options.singular_tol).x
    except SingularSystemError as err:
        raise SmeNonexistent(f"SME does not exist: {err}") from err
    K = system.assemble(x) / unit
    residual = _projected_residual(G, K, S)
    scale = max(1.0, float(np.max(np.sum(np.abs(S), axis=1), initial=0.0)))
    if residual > 1e-8 * scale:
        raise SingularSystemError(f"residual {residual:.3e} exceeds tolerance")
    return SmeSolution(K, residual)


def smt(G: Graph, options=Options()) -> int:
    """
    The score matching threshold, which equals rank(G).

    Examples:
        >>> from mltalgo.generators import grid
        >>> smt(grid(3, 3))
        3
    """
    return rank_of_graph(G, options)


def smt_at_most_three(G: Graph) -> PebbleResult:
    """
    smt(G) <= 3 iff every subgraph spans at most 2#V' - 3 edges; decided by the
    (2, 3) pebble game, which returns a violating subgraph otherwise.
    """
    return pebble_game(G, 2, 3)


def conjecture_lf_check(
    G: Graph, n: int, options=Options(), strong: bool = False
) -> ConjectureCheck:
    """
    The function `conjecture_lf_check` compares the count prediction
    #V + #E <= n*m - C(n, 2) for n-estimability with smt(G) <= n.

    With ``strong`` the count is required of every subgraph on at least n - 1
    vertices instead of the whole graph only.

    Examples:
        >>> from mltalgo.generators import k4_pendant
        >>> conjecture_lf_check(k4_pendant(), 3)
        ConjectureCheck(predicted=True, actual=False, count=12, bound=12)
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    count = G.m + G.num_edges
    bound = n * G.m - comb(n, 2)
    if not strong:
        predicted = count <= bound
    elif n == 1:
        predicted = G.num_edges == 0
    else:
        predicted = laman_count_check(G, n, options).holds
    actual = smt(G, options) <= n
    if predicted != actual:
        _logger.info("count prediction %s disagrees with smt <= %d", predicted, n)
    return ConjectureCheck(predicted, actual, count, bound)


def empirical_existence(
    G: Graph,
    n: int,
    trials: int,
    rng: Optional[RandomSource] = None,
    options=Options(),
) -> float:
    """
    The function `empirical_existence` returns the fraction of ``trials``
    standard normal data sets of size n for which the estimator exists.

    Trial t draws its data from ``rng.spawn(t)``.
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if rng is None:
        rng = RandomSource(options.seed)
    hits = sum(
        sme_exists(G, SampleData.random(n, G.m, rng.spawn(t)), options)
        for t in range(trials)
    )
    return hits / trials


class _AlwaysExists(OracleBS):
    def __init__(self, G: Graph, trials: int, rng: RandomSource, options: Options) -> None:
        self.G = G
        self.trials = trials
        self.rng = rng
        self.options = options

    def assess_bs(self, gamma: int) -> bool:
        frac = empirical_existence(self.G, gamma, self.trials, self.rng, self.options)
        _logger.debug("n = %d: existence fraction %.3f", gamma, frac)
        return frac == 1.0


def empirical_threshold(
    G: Graph, trials: int, rng: Optional[RandomSource] = None, options=Options()
) -> int:
    """
    The smallest n at which the estimator existed in every trial, by bisection
    over 1..m.
    """
    if rng is None:
        rng = RandomSource(options.seed)
    if G.m == 0:
        return 1
    n, _ = bsearch(_AlwaysExists(G, trials, rng, options), (1, G.m))
    return n
