"""
Prime field matrices and the random source behind every generic evaluation

A graph-theoretic "generic" property (independence of an edge set in the
rigidity matroid, surjectivity of a bipartite projection, ...) is a statement
about the rank of a polynomial matrix at a generic point. Evaluating the matrix
at a uniformly random point of (Z_p)^N can only lose rank, and by the
Schwartz-Zippel lemma it loses rank with probability at most deg / p. With
p = 2^61 - 1 and three trials a false "dependent" verdict is out of reach, while
a false "independent" verdict is impossible.

``PrimeFieldMatrix`` stores Python integers in a numpy object array so that
products of two residues never overflow. ``ff_rank`` performs fraction-free
elimination: instead of dividing by the pivot, each lower row is multiplied by
the pivot before the pivot row is subtracted, so no modular inverse is needed.

``RandomSource`` wraps numpy's counter-based Philox bit generator. Per-trial
sources are derived from ``(seed, index)`` with ``numpy.random.SeedSequence``,
so a trial's points depend only on the base seed and the trial index, on every
platform.
"""

from typing import List, Sequence, Tuple, Union

import numpy as np

from .mlt_config import P61


class PrimeFieldMatrix:
    """Dense matrix over Z_p with entries reduced to [0, p)

    Examples:
        >>> M = PrimeFieldMatrix([[1, 2], [2, 4]])
        >>> M.shape, M.rank()
        ((2, 2), 1)
    """

    __slots__ = ("p", "_data")

    def __init__(self, entries: Union[Sequence, np.ndarray], p: int = P61) -> None:
        data = np.array(entries, dtype=object)
        if data.size == 0 and data.ndim != 2:
            data = np.zeros((0, 0), dtype=object)
        elif data.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {data.shape}")
        self.p: int = p
        self._data: np.ndarray = data % p

    @classmethod
    def from_array(cls, data: np.ndarray, p: int = P61) -> "PrimeFieldMatrix":
        """Wraps an object array of already reduced residues without copying."""
        mat = cls.__new__(cls)
        mat.p = p
        mat._data = data
        return mat

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int = P61) -> "PrimeFieldMatrix":
        return cls.from_array(np.zeros((rows, cols), dtype=object), p)

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def data(self) -> np.ndarray:
        return self._data

    def transpose(self) -> "PrimeFieldMatrix":
        return PrimeFieldMatrix.from_array(self._data.T.copy(), self.p)

    def rank(self) -> int:
        return ff_rank(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimeFieldMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and self.shape == other.shape
            and bool(np.all(self._data == other._data))
        )

    def __repr__(self) -> str:
        return f"PrimeFieldMatrix(rows={self.rows}, cols={self.cols}, p={self.p})"


def ff_rank(M: PrimeFieldMatrix) -> int:
    """
    The function `ff_rank` returns the rank of ``M`` over Z_p.

    The pivot of each column is the first nonzero entry at or below the current
    row; rows beneath it are updated as ``row * pivot - pivot_row * row[col]``.

    Examples:
        >>> ff_rank(PrimeFieldMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
        3
        >>> ff_rank(PrimeFieldMatrix.zeros(2, 3))
        0
    """
    p = M.p
    mat = M.data.copy()
    num_rows, num_cols = mat.shape
    row = 0
    for col in range(num_cols):
        if row >= num_rows:
            break
        pivot_rows = np.nonzero(mat[row:, col] != 0)[0]
        if len(pivot_rows) == 0:
            continue
        pivot_row = row + int(pivot_rows[0])
        if pivot_row != row:
            mat[[row, pivot_row]] = mat[[pivot_row, row]]
        pivot = mat[row, col]
        below = mat[row + 1 :]
        if len(below):
            factors = below[:, col].copy()
            mat[row + 1 :] = (below * pivot - np.outer(factors, mat[row])) % p
        row += 1
    return row


class RandomSource:
    """Seeded counter-based stream of generic points

    Examples:
        >>> a = RandomSource(7).field_elements((2, 3), 101)
        >>> b = RandomSource(7).field_elements((2, 3), 101)
        >>> bool(np.all(a == b))
        True
    """

    __slots__ = ("seed", "_gen")

    algorithm: str = "philox"

    def __init__(self, seed: int = 0) -> None:
        self.seed: int = int(seed)
        self._gen = np.random.Generator(np.random.Philox(self.seed))

    def spawn(self, index: int) -> "RandomSource":
        """Independent child source determined by ``(seed, index)`` alone."""
        return RandomSource(derive_seed(self.seed, index))

    def child_seeds(self, count: int) -> List[int]:
        return [derive_seed(self.seed, i) for i in range(count)]

    def field_elements(self, shape: Tuple[int, ...], p: int = P61) -> np.ndarray:
        """Uniform draws from [1, p - 1] as an object array of Python ints."""
        if int(np.prod(shape)) == 0:
            return np.zeros(shape, dtype=object)
        return self._gen.integers(1, p, size=shape, dtype=np.int64).astype(object)

    def normal(self, shape: Tuple[int, ...]) -> np.ndarray:
        return self._gen.standard_normal(shape)

    def integers(self, low: int, high: int) -> int:
        return int(self._gen.integers(low, high))

    def permutation(self, n: int) -> List[int]:
        return [int(x) for x in self._gen.permutation(n)]

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed}, algorithm={self.algorithm!r})"


def derive_seed(seed: int, index: int) -> int:
    """64-bit seed of the ``index``-th child of ``seed``."""
    state = np.random.SeedSequence([int(seed), int(index)]).generate_state(
        1, dtype=np.uint64
    )
    return int(state[0])
