"""
Floating-point rank and dense solves

The score matching module needs two things from real linear algebra: the
numerical rank of the (n*m) x (#V+#E) coefficient matrix, which decides whether
the estimator exists, and the solution of the square estimating equations.
The rank comes from a column-pivoted QR factorization, the solve from an LU
factorization with partial pivoting, both from scipy.linalg.
"""

import logging
import warnings
from typing import NamedTuple

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor, lu_solve, qr

from .mlt_config import Options, SingularSystemError

_logger = logging.getLogger(__name__)


class SolveResult(NamedTuple):
    x: np.ndarray
    residual: float  # max |Ax - b|


def _as_finite(mat) -> np.ndarray:
    arr = np.array(mat, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def real_rank(mat, tol: float = Options.rank_tol) -> int:
    """
    The function `real_rank` computes the numerical rank from a QR factorization
    with column pivoting.

    The diagonal of R is non-increasing in magnitude; the rank counts the
    entries above ``tol`` times the first one.

    :param mat: two-dimensional array-like of finite floats
    :param tol: relative pivot threshold, positive
    :raises ValueError: on non-finite entries or a non-positive tolerance

    Examples:
        >>> real_rank(np.eye(4))
        4
        >>> real_rank(np.outer([1.0, 2.0, 3.0], [4.0, 5.0]))
        1
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    a = _as_finite(mat)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {a.shape}")
    if a.size == 0:
        return 0
    R, _ = qr(a, mode="r", pivoting=True)
    diag = np.abs(np.diag(R))
    if diag[0] == 0.0:
        return 0
    return int(np.count_nonzero(diag > tol * diag[0]))


def solve_dense(A, b, singular_tol: float = Options.singular_tol) -> SolveResult:
    """
    The function `solve_dense` solves the square system Ax = b by LU
    factorization with partial pivoting.

    :param A: square array-like
    :param b: right-hand side vector
    :param singular_tol: pivot threshold relative to the largest entry of A
    :raises SingularSystemError: when a pivot of U falls below the threshold

    Examples:
        >>> solve_dense(np.diag([2.0, 4.0]), np.array([2.0, 4.0])).x
        array([1., 1.])
    """
    a = _as_finite(A)
    rhs = _as_finite(b).reshape(-1)
    num_rows = a.shape[0]
    if a.ndim != 2 or a.shape[1] != num_rows:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if rhs.shape[0] != num_rows:
        raise ValueError("right-hand side length does not match the matrix")
    if num_rows == 0:
        return SolveResult(rhs, 0.0)
    threshold = singular_tol * float(np.max(np.abs(a)))
    with warnings.catch_warnings():
        # exactly singular input is reported below
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = lu_factor(a)
    pivots = np.abs(np.diag(lu))
    k = int(np.argmin(pivots))
    if pivots[k] <= threshold:
        raise SingularSystemError(f"singular system: pivot {pivots[k]:.3e} in column {k}")
    x = lu_solve((lu, piv), rhs)
    residual = float(np.max(np.abs(a @ x - rhs)))
    _logger.debug("solve_dense n=%d residual=%.3e", num_rows, residual)
    return SolveResult(x, residual)
