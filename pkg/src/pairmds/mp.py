"""Matrix-product codes ``[C_1, ..., C_M] * A``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .code import LinearCode, dual, from_generator
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    MissingParity,
    NonSquareA,
    NotNsc,
    RankDeficientA,
    ShapeError,
    SingularA,
    SingularMatrix,
)
from .gf import FieldSpec, root_of_unity
from .linalg import FMatrix, determinant_nonzero, inverse, rank


@dataclass(frozen=True, eq=False)
class MpSpec:
    constituents: tuple[LinearCode, ...]
    A: FMatrix

    def __post_init__(self):
        cs = tuple(self.constituents)
        object.__setattr__(self, "constituents", cs)
        if not cs:
            raise DimensionMismatch("at least one constituent code is required")
        f = self.A.field
        for c in cs:
            if c.field != f:
                raise FieldMismatch(f"constituent over {c.field}, A over {f}")
        if len({c.n for c in cs}) != 1:
            raise DimensionMismatch(f"constituent lengths differ: {[c.n for c in cs]}")
        if self.A.rows != len(cs):
            raise DimensionMismatch(f"A has {self.A.rows} rows for {len(cs)} constituents")
        if self.A.rows > self.A.cols:
            raise ShapeError(f"A is {self.A.shape}; need M <= N")

    @property
    def field(self) -> FieldSpec:
        return self.A.field

    @property
    def M(self) -> int:
        return self.A.rows

    @property
    def N(self) -> int:
        return self.A.cols

    @property
    def n(self) -> int:
        return self.constituents[0].n

    def to_dict(self) -> dict:
        return {"constituents": [c.provenance for c in self.constituents], "A": self.A.to_lists()}


def is_nsc(A: FMatrix) -> bool:
    """Every t x t minor on the first t rows is nonsingular, for t = 1..M."""
    M, N = A.shape
    if M > N:
        raise ShapeError(f"A is {A.shape}; need M <= N")
    for t in range(1, M + 1):
        for cols in combinations(range(N), t):
            if not determinant_nonzero(A.submatrix(range(t), cols)):
                return False
    return True


def standard_A(f: FieldSpec, M: int) -> FMatrix:
    """``A[i][j] = omega^(i*j)`` for a primitive M-th root of unity omega."""
    w = root_of_unity(f, M).index
    return FMatrix(f, [[f.ipow(w, i * j) for j in range(M)] for i in range(M)])


def mp_generator(spec: MpSpec) -> LinearCode:
    """Block row i of the generator is ``(a_i1 G_i | a_i2 G_i | ... | a_iN G_i)``."""
    f, A = spec.field, spec.A.data
    if rank(spec.A) != spec.M:
        raise RankDeficientA(f"A has rank {rank(spec.A)} < {spec.M}")
    blocks = []
    for i, c in enumerate(spec.constituents):
        if c.k == 0:
            continue
        blocks.append(np.hstack([f.mul_table[A[i, j], c.G.data] for j in range(spec.N)]))
    n = spec.n * spec.N
    G = np.vstack(blocks) if blocks else np.zeros((0, n), dtype=np.int64)
    return from_generator(FMatrix(f, G), None, {"mp": spec.to_dict()})


def _square_inverse(spec: MpSpec) -> FMatrix:
    if spec.M != spec.N:
        raise NonSquareA(f"A is {spec.A.shape}; the dual construction needs a square A")
    try:
        return inverse(spec.A)
    except SingularMatrix as exc:
        raise SingularA(str(exc)) from exc


def _constituent_parity(c: LinearCode) -> FMatrix:
    if c.H is not None:
        return c.H
    if c.provenance.get("derivable"):
        return dual(c).G
    raise MissingParity(f"constituent {c!r} has no parity-check matrix")


def mp_parity(spec: MpSpec) -> FMatrix:
    """Parity-check matrix with block (i, j) equal to ``((A^-1)^T)_ij H_i``.

    Any common scalar in front of ``(A^-1)^T`` is dropped, so this generates
    the same row space as the textbook form.
    """
    f = spec.field
    B = _square_inverse(spec).data.T
    blocks = []
    for i, c in enumerate(spec.constituents):
        Hi = _constituent_parity(c).data
        if Hi.shape[0] == 0:
            continue
        blocks.append(np.hstack([f.mul_table[B[i, j], Hi] for j in range(spec.N)]))
    n = spec.n * spec.N
    H = np.vstack(blocks) if blocks else np.zeros((0, n), dtype=np.int64)
    return FMatrix(f, H.reshape(-1, n))


def mp_code(spec: MpSpec) -> LinearCode:
    """Generator and parity check together, when A is square."""
    C = mp_generator(spec)
    H = mp_parity(spec) if spec.M == spec.N else None
    return LinearCode(C.field, C.n, C.k, C.G, H, C.provenance)


def mp_dual(spec: MpSpec) -> LinearCode:
    """The dual as the MP code ``[C_1^perp, ..., C_M^perp] * (A^-1)^T``."""
    Ainv_T = _square_inverse(spec).T
    duals = [dual(c) for c in spec.constituents]
    return mp_generator(MpSpec(tuple(duals), Ainv_T))


def product_distance_bound(spec: MpSpec, distances: Sequence[int] | None = None) -> int:
    """``min_i d_i (M - i + 1)`` for NSC A (i counted from 1)."""
    if not is_nsc(spec.A):
        raise NotNsc("the distance bound needs an NSC matrix")
    if distances is None:
        from .code import min_hamming_distance
        distances = [c.n - c.k + 1 if c.k == c.n else min_hamming_distance(c)[0]
                     for c in spec.constituents]
    M = spec.M
    return min(d * (M - i) for i, d in enumerate(distances))
