"""Symbol-pair weight, exact minimum pair distance and MDS/AMDS classification.

For a word of Hamming weight w < n the pair weight is ``w + runs``, where
``runs`` counts the maximal cyclic runs of nonzero coordinates.  It therefore
depends only on the support, which is what makes the support search exact:
every candidate support is scored before any linear algebra is done.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .code import (
    LinearCode,
    _run_parallel,
    _search_plan,
    _split_firsts,
    _tables,
    hamming_by_message,
    hamming_by_support,
    support_witness,
)
from .errors import BoundViolation, TooShort, ZeroCode

CLASSES = ("MDS", "AMDS", "NONE")


def pair_read(u: Sequence) -> list[tuple]:
    u = list(u)
    if len(u) < 2:
        raise TooShort("the pair read vector needs length >= 2")
    return [(u[i], u[(i + 1) % len(u)]) for i in range(len(u))]


def pair_weight(u: Sequence) -> int:
    """Number of cyclic positions i with ``(u_i, u_{i+1}) != (0, 0)``."""
    a = np.asarray([int(x) for x in u])
    if a.size < 2:
        raise TooShort("pair weight needs length >= 2")
    nz = a != 0
    return int(np.count_nonzero(nz | np.roll(nz, -1)))


def hamming_weight(u: Sequence) -> int:
    return int(np.count_nonzero(np.asarray([int(x) for x in u])))


def cyclic_runs(support: Sequence[int], n: int) -> int:
    s = set(support)
    if len(s) == n:
        return 0
    return sum(1 for i in s if (i - 1) % n not in s)


def classify(n: int, k: int, d_sp: int, q: int | None = None) -> str:
    """MDS when ``k = n - d_sp + 2``, AMDS one below, NONE otherwise."""
    if k > n - d_sp + 2:
        raise BoundViolation(f"k={k} exceeds n - d_sp + 2 = {n - d_sp + 2}")
    if k == n - d_sp + 2:
        return "MDS"
    if k == n - d_sp + 1:
        return "AMDS"
    return "NONE"


@dataclass
class PairAnalysisReport:
    n: int
    k: int
    q: int
    d_H: int
    d_sp: int
    classification: str
    witness_H: list[int]
    witness_sp: list[int]
    strategy: str
    work: dict = field(default_factory=dict)

    def to_line(self) -> str:
        return (f"n={self.n} k={self.k} q={self.q} d_H={self.d_H} "
                f"d_sp={self.d_sp} class={self.classification}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["class"] = d.pop("classification")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PairAnalysisReport":
        d = dict(d)
        d["classification"] = d.pop("class")
        return cls(**d)


def _pair_by_support(C: LinearCode, d_H: int, witness_H: np.ndarray, workers: int, backend: str | None):
    impl = kernels.get_backend(backend)
    n = C.n
    H = C.parity()
    Hd = np.ascontiguousarray(H.data)
    T = _tables(C.field)
    best = pair_weight(witness_H)
    best_support = tuple(int(i) for i in np.flatnonzero(witness_H))
    checked = 0
    w = d_H
    # a weight-w word with w < n has pair weight >= w + 1
    while w < n and w + 1 < best:
        parts = _split_firsts(n, workers)
        results = _run_parallel(
            lambda part, w=w, b=best: impl.scan_pair_supports(Hd, w, b, part, *T, C.q), parts)
        checked += sum(int(r[2]) for r in results)
        hits = [(int(r[0]), tuple(int(x) for x in r[1])) for r in results if int(r[0]) < best]
        if hits:
            best, best_support = min(hits)
        w += 1
    if best_support == tuple(int(i) for i in np.flatnonzero(witness_H)):
        witness = witness_H
    else:
        witness = support_witness(H, best_support, n)
    return best, witness, checked


def min_pair_distance(C: LinearCode, strategy: str = "auto", cap: int | None = None,
                      workers: int = 1, backend: str | None = None) -> tuple[int, np.ndarray]:
    """Exact minimum pair weight over nonzero codewords, with its witness."""
    r = _analyze(C, strategy, cap, workers, backend)
    return r.d_sp, np.asarray(r.witness_sp)


def _analyze(C: LinearCode, strategy: str, cap, workers: int, backend) -> PairAnalysisReport:
    if C.k == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    if C.n < 2:
        raise TooShort("pair distance needs n >= 2")
    plan = _search_plan(C, strategy, cap)
    if plan == "message":
        d_H, wh, ws, count = hamming_by_message(C, cap, backend)
        work = {"codewords": count, "supports": 0}
    else:
        d_H, wh, checked_h = hamming_by_support(C, workers, backend)
        d_sp, ws, checked_s = _pair_by_support(C, d_H, wh, workers, backend)
        work = {"codewords": 0, "supports": checked_h + checked_s}
    d_sp = pair_weight(ws)
    return PairAnalysisReport(
        n=C.n, k=C.k, q=C.q, d_H=d_H, d_sp=d_sp,
        classification=classify(C.n, C.k, d_sp, C.q),
        witness_H=[int(x) for x in wh], witness_sp=[int(x) for x in ws],
        strategy=plan, work=work,
    )


def analyze(C: LinearCode, strategy: str = "auto", cap: int | None = None,
            workers: int = 1, backend: str | None = None) -> PairAnalysisReport:
    """d_H, d_sp, witnesses and classification of a code."""
    report = _analyze(C, strategy, cap, workers, backend)
    for name in ("witness_H", "witness_sp"):
        if not C.contains(getattr(report, name)):
            raise AssertionError(f"{name} is not a codeword")
    return report
