"""Linear codes over GF(q): construction, duals, encoding and minimum Hamming distance."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .errors import (
    BadRedundancy,
    DimensionMismatch,
    DuplicatePoints,
    EnumerationTooLarge,
    RankDeficientParity,
    ZeroCode,
)
from .gf import FieldSpec
from .linalg import FMatrix, _as_index, kernel, mat_mul, rank, vandermonde

DEFAULT_CAP = 1 << 22


def enumeration_cap(cap: int | None = None) -> int:
    """Explicit cap, else ``PAIRMDS_CAP`` from the environment, else 2^22 messages."""
    if cap is not None:
        return int(cap)
    env = os.environ.get("PAIRMDS_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: FieldSpec
    n: int
    k: int
    G: FMatrix
    H: FMatrix | None = None
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.G.shape != (self.k, self.n):
            raise DimensionMismatch(f"generator shape {self.G.shape} != ({self.k}, {self.n})")
        if self.H is not None and self.H.shape != (self.n - self.k, self.n):
            raise DimensionMismatch(f"parity shape {self.H.shape} != ({self.n - self.k}, {self.n})")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def params(self) -> tuple[int, int]:
        return self.n, self.k

    def parity(self) -> FMatrix:
        """The stored parity-check matrix, or one computed from the generator."""
        return self.H if self.H is not None else kernel(self.G)

    def contains(self, word) -> bool:
        w = FMatrix(self.field, np.atleast_2d(np.asarray(word, dtype=np.int64)))
        return mat_mul(w, self.parity().T).is_zero()

    def same_code(self, other: "LinearCode") -> bool:
        return self.field == other.field and self.n == other.n and self.k == other.k and (
            self.k == 0 or self.G.same_row_space(other.G))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.q})"


def from_generator(G: FMatrix, H: FMatrix | None = None, provenance: dict | None = None) -> LinearCode:
    k = rank(G)
    if k != G.rows:
        raise DimensionMismatch(f"generator has rank {k} but {G.rows} rows")
    return LinearCode(G.field, G.cols, k, G, H, dict(provenance or {}))


def from_parity(H: FMatrix, provenance: dict | None = None) -> LinearCode:
    """The code ``{x : H x^T = 0}``; H must have full row rank."""
    r = rank(H)
    if r != H.rows or (H.rows and H.rows >= H.cols):
        raise RankDeficientParity(f"parity matrix {H.shape} has rank {r}")
    G = kernel(H)
    return LinearCode(H.field, H.cols, H.cols - H.rows, G, H, dict(provenance or {}))


def full_space(f: FieldSpec, n: int) -> LinearCode:
    return LinearCode(f, n, n, FMatrix.identity(f, n), FMatrix.zeros(f, 0, n), {"kind": "full", "n": n})


def grs(f: FieldSpec, points: Sequence, i: int) -> LinearCode:
    """[n, n-i, i+1] GRS code with all-ones column multipliers: parity ``vandermonde(points, i)``."""
    pts = [_as_index(f, a) for a in points]
    n = len(pts)
    if len(set(pts)) != n:
        raise DuplicatePoints(f"evaluation points are not distinct: {pts}")
    if not 1 <= i < n:
        raise BadRedundancy(f"redundancy must lie in [1, {n}), got {i}")
    H = vandermonde(f, pts, i)
    return from_parity(H, {"kind": "grs", "points": pts, "redundancy": i})


def dual(C: LinearCode) -> LinearCode:
    H = C.parity()
    prov = {"kind": "dual", "of": C.provenance}
    if H.rows == 0:
        return LinearCode(C.field, C.n, 0, H, C.G, prov)
    return LinearCode(C.field, C.n, H.rows, H, C.G, prov)


def encode(C: LinearCode, msg) -> np.ndarray:
    m = FMatrix(C.field, np.asarray(msg, dtype=np.int64).reshape(1, -1))
    if m.cols != C.k:
        raise DimensionMismatch(f"message length {m.cols} != k = {C.k}")
    return mat_mul(m, C.G).data[0].copy()


def _check_cap(C: LinearCode, cap: int | None) -> None:
    cap = enumeration_cap(cap)
    if C.q**C.k > cap:
        raise EnumerationTooLarge(f"{C.q}^{C.k} codewords exceed the enumeration cap {cap}")


def codeword_batches(C: LinearCode, batch: int = 1 << 15, cap: int | None = None) -> Iterator[np.ndarray]:
    """All q^k codewords as ``(b, n)`` arrays; message digits in base q, last symbol fastest."""
    _check_cap(C, cap)
    f, q, k = C.field, C.q, C.k
    total = q**k
    G = C.G.data
    for start in range(0, total, batch):
        ids = np.arange(start, min(total, start + batch), dtype=np.int64)
        acc = np.zeros((ids.size, C.n), dtype=np.int64)
        rem = ids
        for j in range(k - 1, -1, -1):
            d = rem % q
            rem = rem // q
            acc = f.add_table[acc, f.mul_table[d[:, None], G[j][None, :]]]
        yield acc


def enumerate_codewords(C: LinearCode, cap: int | None = None) -> Iterator[np.ndarray]:
    for chunk in codeword_batches(C, cap=cap):
        yield from chunk


def normalize(f: FieldSpec, word: np.ndarray) -> np.ndarray:
    """Scale so the first nonzero entry is 1."""
    word = np.asarray(word, dtype=np.int64)
    nz = np.flatnonzero(word)
    if nz.size == 0:
        return word.copy()
    return f.mul_table[f.inv_table[word[nz[0]]], word]


def support_witness(H: FMatrix, support: Sequence[int], n: int | None = None) -> np.ndarray | None:
    """Smallest normalized codeword of ``ker H`` whose support is exactly ``support``.

    Searches the kernel of the column selection in lexicographic order of the
    normalized coefficient vector; returns None when no such codeword exists.
    """
    f = H.field
    n = H.cols if n is None else n
    S = list(support)
    sub = H.submatrix(None, S) if H.rows else FMatrix.zeros(f, 0, len(S))
    K = kernel(sub).data
    t = K.shape[0]
    if t == 0:
        return None
    # enumerate combinations y of basis rows, keep the lexicographically smallest valid word
    best = None
    q = f.q
    for code in range(q**t):
        y = [(code // q**(t - 1 - j)) % q for j in range(t)]
        v = np.zeros(len(S), dtype=np.int64)
        for j, c in enumerate(y):
            if c:
                v = f.add_table[v, f.mul_table[c, K[j]]]
        if v[0] != 1 or not v.all():
            continue
        if best is None or tuple(v) < tuple(best):
            best = v
    if best is None:
        return None
    word = np.zeros(n, dtype=np.int64)
    word[S] = best
    return word


def _hamming_key(word: np.ndarray) -> tuple:
    return (int(np.count_nonzero(word)), tuple((word == 0).astype(int)), tuple(int(x) for x in word))


def _search_plan(C: LinearCode, strategy: str, cap: int | None) -> str:
    if strategy not in ("auto", "message", "support"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        return "message" if C.q**C.k <= enumeration_cap(cap) else "support"
    if strategy == "message":
        _check_cap(C, cap)
    return strategy


def _tables(f: FieldSpec):
    return f.add_table, f.mul_table, f.neg_table, f.inv_table


def _split_firsts(n: int, workers: int) -> list[np.ndarray]:
    firsts = np.arange(n, dtype=np.int64)
    workers = max(1, min(workers, n))
    return [firsts[i::workers] for i in range(workers)]


def _run_parallel(fn, parts):
    if len(parts) == 1:
        return [fn(parts[0])]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        return list(pool.map(fn, parts))


def hamming_by_support(C: LinearCode, workers: int = 1, backend: str | None = None) -> tuple[int, np.ndarray, int]:
    """(d_H, witness, supports checked): first w with a dependent w-subset of columns of H."""
    if C.k == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    impl = kernels.get_backend(backend)
    H = C.parity()
    Hd = np.ascontiguousarray(H.data)
    T = _tables(C.field)
    checked = 0
    for w in range(1, C.n + 1):
        results = _run_parallel(
            lambda part: impl.first_dependent_support(Hd, w, part, *T, C.q), _split_firsts(C.n, workers))
        checked += sum(int(r[2]) for r in results)
        hits = [tuple(int(x) for x in r[1]) for r in results if r[0]]
        if hits:
            support = min(hits)
            # a minimum-weight dependent set carries a unique full-support kernel line
            word = support_witness(H, support, C.n)
            return w, word, checked
    raise AssertionError("unreachable: n+1 columns of an (n-k)-row matrix are dependent")


def hamming_by_message(C: LinearCode, cap: int | None = None, backend: str | None = None):
    """(d_H, witness_H, witness_sp, codewords visited) by projective message enumeration."""
    if C.k == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    _check_cap(C, cap)
    impl = kernels.get_backend(backend)
    bh, bs, count = impl.message_minima(np.ascontiguousarray(C.G.data), *_tables(C.field), C.q)
    return int(np.count_nonzero(bh)), np.asarray(bh), np.asarray(bs), int(count)


def min_hamming_distance(C: LinearCode, strategy: str = "auto", cap: int | None = None,
                         workers: int = 1, backend: str | None = None) -> tuple[int, np.ndarray]:
    """Exact minimum Hamming distance and its lexicographically smallest normalized witness."""
    if C.k == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    plan = _search_plan(C, strategy, cap)
    if plan == "message":
        d, wit, _, _ = hamming_by_message(C, cap, backend)
        return d, wit
    d, wit, _ = hamming_by_support(C, workers, backend)
    return d, wit
