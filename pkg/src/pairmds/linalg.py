"""Dense matrices over a :class:`~pairmds.gf.FieldSpec`.

Entries are stored as canonical element indices in an ``int64`` numpy array;
all arithmetic goes through the field's lookup tables, one row at a time.
Matrices are treated as immutable values: every operation returns a fresh
:class:`FMatrix`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, SingularMatrix
from .gf import FieldElement, FieldSpec


def _as_index(f: FieldSpec, x) -> int:
    if isinstance(x, FieldElement):
        if x.field != f:
            raise FieldMismatch(f"{x.field} element in a {f} matrix")
        return x.index
    x = int(x)
    if not 0 <= x < f.q:
        raise ValueError(f"entry {x} is not an element index of {f}")
    return x


class FMatrix:
    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries outside [0, {field.q})")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    # -- constructors ------------------------------------------------------------
    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence], cols: int | None = None) -> "FMatrix":
        rows = [[_as_index(field, x) for x in row] for row in rows]
        if not rows:
            return cls.zeros(field, 0, cols or 0)
        return cls(field, rows)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "FMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "FMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    # -- basic protocol ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __getitem__(self, key):
        if isinstance(key, tuple) and all(isinstance(k, (int, np.integer)) for k in key):
            return FieldElement(self.field, int(self.data[key]))
        return FMatrix(self.field, np.atleast_2d(self.data[key]))

    def __eq__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(
            np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.field.q, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"FMatrix({self.field}, {self.to_lists()})"

    def to_lists(self) -> list[list[int]]:
        return self.data.tolist()

    def _check_field(self, other: "FMatrix") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    @property
    def T(self) -> "FMatrix":
        return FMatrix(self.field, self.data.T)

    def transpose(self) -> "FMatrix":
        return self.T

    def is_zero(self) -> bool:
        return not self.data.any()

    # -- arithmetic --------------------------------------------------------------
    def __add__(self, other: "FMatrix") -> "FMatrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return FMatrix(self.field, self.field.add_table[self.data, other.data])

    def __neg__(self) -> "FMatrix":
        return FMatrix(self.field, self.field.neg_table[self.data])

    def __sub__(self, other: "FMatrix") -> "FMatrix":
        return self + (-other)

    def scale(self, c) -> "FMatrix":
        c = _as_index(self.field, c)
        return FMatrix(self.field, self.field.mul_table[c, self.data])

    def __matmul__(self, other: "FMatrix") -> "FMatrix":
        return mat_mul(self, other)

    # -- structure -----------------------------------------------------------------
    def submatrix(self, row_set: Sequence[int] | None = None, col_set: Sequence[int] | None = None) -> "FMatrix":
        r = range(self.rows) if row_set is None else list(row_set)
        c = range(self.cols) if col_set is None else list(col_set)
        for i in r:
            if not 0 <= i < self.rows:
                raise IndexOutOfRange(f"row {i} not in [0, {self.rows})")
        for j in c:
            if not 0 <= j < self.cols:
                raise IndexOutOfRange(f"column {j} not in [0, {self.cols})")
        return FMatrix(self.field, self.data[np.ix_(list(r), list(c))].reshape(len(r), len(c)))

    def hstack(self, *others: "FMatrix") -> "FMatrix":
        for o in others:
            self._check_field(o)
            if o.rows != self.rows:
                raise DimensionMismatch("hstack needs equal row counts")
        return FMatrix(self.field, np.hstack([self.data] + [o.data for o in others]))

    def vstack(self, *others: "FMatrix") -> "FMatrix":
        for o in others:
            self._check_field(o)
            if o.cols != self.cols:
                raise DimensionMismatch("vstack needs equal column counts")
        return FMatrix(self.field, np.vstack([self.data] + [o.data for o in others]))

    def rref(self) -> tuple["FMatrix", list[int]]:
        return rref(self)

    def rank(self) -> int:
        return rank(self)

    def kernel(self) -> "FMatrix":
        return kernel(self)

    def inverse(self) -> "FMatrix":
        return inverse(self)

    def same_row_space(self, other: "FMatrix") -> bool:
        """True when both matrices span the same row space (row scaling, reordering)."""
        self._check_field(other)
        if self.cols != other.cols:
            return False
        a, pa = rref(self)
        b, pb = rref(other)
        return pa == pb and np.array_equal(a.data[: len(pa)], b.data[: len(pb)])


def _rref_array(f: FieldSpec, data: np.ndarray, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan with first-nonzero pivoting; pivots searched in the first ``ncols`` columns."""
    add, mul, neg, inv = f.add_table, f.mul_table, f.neg_table, f.inv_table
    R = np.array(data, dtype=np.int64, copy=True)
    rows, cols = R.shape
    ncols = cols if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = mul[inv[R[r, c]], R[r]]
        factors = R[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = add[R[hit], neg[mul[factors[hit, None], R[r][None, :]]]]
        pivots.append(c)
        r += 1
    return R, pivots


def rref(M: FMatrix) -> tuple[FMatrix, list[int]]:
    """Reduced row echelon form and the strictly increasing pivot columns."""
    R, pivots = _rref_array(M.field, M.data)
    return FMatrix(M.field, R), pivots


def rank(M: FMatrix) -> int:
    return len(_rref_array(M.field, M.data)[1])


def kernel(M: FMatrix) -> FMatrix:
    """Right kernel ``{x : M x^T = 0}`` as the rows of a matrix in RREF."""
    f = M.field
    R, pivots = _rref_array(f, M.data)
    n = M.cols
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, fc in enumerate(free):
        basis[t, fc] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = f.neg_table[R[i, fc]]
    if len(free):
        basis, _ = _rref_array(f, basis)
    return FMatrix(f, basis.reshape(len(free), n))


def mat_mul(A: FMatrix, B: FMatrix) -> FMatrix:
    A._check_field(B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    f = A.field
    if f.m == 1:
        return FMatrix(f, (A.data @ B.data) % f.p)
    acc = np.zeros((A.rows, B.cols), dtype=np.int64)
    for t in range(A.cols):
        acc = f.add_table[acc, f.mul_table[A.data[:, t, None], B.data[None, t, :]]]
    return FMatrix(f, acc)


def inverse(A: FMatrix) -> FMatrix:
    if A.rows != A.cols:
        raise DimensionMismatch(f"inverse of non-square {A.shape} matrix")
    n = A.rows
    aug = np.hstack([A.data, np.eye(n, dtype=np.int64)])
    R, pivots = _rref_array(A.field, aug, ncols=n)
    if len(pivots) < n:
        raise SingularMatrix(f"matrix has rank {len(pivots)} < {n}")
    return FMatrix(A.field, R[:, n:])


def vandermonde(field: FieldSpec, points: Sequence, nrows: int) -> FMatrix:
    """Rows ``a_c^r`` for r in [0, nrows); row 0 is all ones (0^0 = 1)."""
    pts = [_as_index(field, a) for a in points]
    data = np.ones((nrows, len(pts)), dtype=np.int64)
    for r in range(1, nrows):
        data[r] = field.mul_table[data[r - 1], pts]
    return FMatrix(field, data.reshape(nrows, len(pts)))


def submatrix(M: FMatrix, row_set, col_set) -> FMatrix:
    return M.submatrix(row_set, col_set)


def determinant_nonzero(M: FMatrix) -> bool:
    return M.rows == M.cols and rank(M) == M.rows
