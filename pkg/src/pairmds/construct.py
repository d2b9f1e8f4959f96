"""The five interleaved matrix-product families and their verification.

Each family is ``D = pi([C_1, ..., C_M] * A)`` where the constituents are
nested GRS codes (or the full space) on the first n points of the coset
ordering, ``A[i][j] = omega^(i*j)`` for a primitive M-th root of unity, and
``pi`` is a block interleaver followed by a residue-class shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .code import LinearCode, full_space, grs
from .errors import InadmissibleParameters, TooLong, VerificationFailed
from .gf import FieldElement, FieldSpec, field_of_order, prime_power, root_of_unity
from .mp import MpSpec, mp_code, standard_A
from .perm import PermutationMap, apply, interleaver
from .sympair import PairAnalysisReport, analyze


@dataclass(frozen=True)
class TheoremId:
    id: str
    M: int
    d_sp: int
    d_H: int
    redundancies: tuple[int, ...]  # 0 = full space
    n_min: int
    interleave: str
    classification: str
    odd_q: bool = False
    p_not_3: bool = False

    def dimension(self, n: int) -> int:
        return self.M * n - sum(self.redundancies)

    def n_range(self, q: int) -> range:
        return range(self.n_min, q + 1)

    def check(self, q: int, n: int) -> None:
        """Raise InadmissibleParameters naming the first violated condition."""
        pm = prime_power(q)
        if pm is None:
            raise InadmissibleParameters(f"q must be a prime power, got {q}")
        p, _ = pm
        if (q - 1) % self.M:
            raise InadmissibleParameters(f"q must satisfy q = 1 mod {self.M}, got {q}")
        if self.odd_q and q % 2 == 0:
            raise InadmissibleParameters(f"q must be odd, got {q}")
        if self.p_not_3 and p == 3:
            raise InadmissibleParameters(f"the characteristic must not be 3, got q = {q}")
        if not self.n_min <= n <= q:
            raise InadmissibleParameters(f"n must lie in [{self.n_min}, q] = [{self.n_min}, {q}], got {n}")

    def admissible(self, q: int, n: int) -> bool:
        try:
            self.check(q, n)
        except InadmissibleParameters:
            return False
        return True


THEOREMS: dict[str, TheoremId] = {
    "3.1": TheoremId("3.1", 3, 8, 4, (1, 2, 3), 4, "phi", "MDS"),
    "3.2": TheoremId("3.2", 3, 7, 4, (1, 1, 3), 4, "phi", "MDS", odd_q=True),
    "3.3": TheoremId("3.3", 3, 10, 5, (2, 2, 4), 5, "phi", "MDS"),
    "3.4": TheoremId("3.4", 4, 6, 3, (0, 0, 1, 3), 4, "tau_v1", "MDS", p_not_3=True),
    "3.5": TheoremId("3.5", 4, 7, 4, (0, 1, 1, 4), 5, "tau_v2", "AMDS"),
}

# (theorem, q, n) reproducing each worked example
EXAMPLES: dict[str, tuple[str, int, int]] = {
    "3.1": ("3.1", 4, 4),
    "3.2": ("3.2", 7, 4),
    "3.3": ("3.3", 7, 5),
    "3.4": ("3.4", 5, 5),
    "3.5": ("3.5", 9, 6),
}


def theorem(tid) -> TheoremId:
    key = str(tid).upper().removeprefix("T")
    if key not in THEOREMS:
        raise InadmissibleParameters(f"unknown theorem {tid!r}; expected one of {sorted(THEOREMS)}")
    return THEOREMS[key]


def coset_ordering(f: FieldSpec) -> list[FieldElement]:
    """Cosets ``chi + GF(p)`` with chi of zero constant coefficient, each walked by +1.

    With canonical indices this is simply 0, 1, ..., q-1.
    """
    reps = [a for a in range(f.q) if a % f.p == 0]
    return [f.element(chi + c) for chi in reps for c in range(f.p)]


def evaluation_vector(f: FieldSpec, n: int) -> list[FieldElement]:
    if not 1 <= n <= f.q:
        raise TooLong(f"need 1 <= n <= q = {f.q}, got {n}")
    return coset_ordering(f)[:n]


def _constituent(f: FieldSpec, points, redundancy: int) -> LinearCode:
    if redundancy == 0:
        return full_space(f, len(points))
    return grs(f, points, redundancy)


def mp_spec(tid, q: int, n: int, modulus=None) -> MpSpec:
    th = theorem(tid)
    th.check(q, n)
    f = field_of_order(q, modulus)
    pts = evaluation_vector(f, n)
    cs = tuple(_constituent(f, pts, r) for r in th.redundancies)
    return MpSpec(cs, standard_A(f, th.M))


def build_unpermuted(tid, q: int, n: int, modulus=None) -> LinearCode:
    """The matrix-product code before interleaving."""
    return mp_code(mp_spec(tid, q, n, modulus))


def permutation(tid, n: int) -> PermutationMap:
    return interleaver(theorem(tid).interleave, n)


def build(tid, q: int, n: int, modulus=None) -> LinearCode:
    th = theorem(tid)
    spec = mp_spec(th.id, q, n, modulus)
    f = spec.field
    C = mp_code(spec)
    pi = permutation(th.id, n)
    D = apply(C, pi)
    prov = {
        "theorem": th.id,
        "q": q,
        "n": n,
        "omega": root_of_unity(f, th.M).index,
        "points": [a.index for a in evaluation_vector(f, n)],
        "permutation": pi.to_list(),
        "mp": spec.to_dict(),
    }
    return LinearCode(D.field, D.n, D.k, D.G, D.H, prov)


@dataclass
class Verification:
    theorem: str
    q: int
    n: int
    report: PairAnalysisReport
    checks: dict[str, tuple[object, object]]

    @property
    def passed(self) -> bool:
        return all(exp == got for exp, got in self.checks.values())

    def failures(self) -> dict[str, tuple[object, object]]:
        return {k: v for k, v in self.checks.items() if v[0] != v[1]}


def check_code(tid, q: int, n: int, C: LinearCode, report: PairAnalysisReport) -> Verification:
    th = theorem(tid)
    checks = {
        "length": (th.M * n, C.n),
        "k": (th.dimension(n), C.k),
        "d_H": (th.d_H, report.d_H),
        "d_sp": (th.d_sp, report.d_sp),
        "class": (th.classification, report.classification),
    }
    return Verification(th.id, q, n, report, checks)


def verify(tid, q: int, n: int, modulus=None, strategy: str = "auto", cap=None,
           workers: int = 1, backend: str | None = None, raise_on_fail: bool = True) -> Verification:
    """Build, analyze and compare against the family's stated parameters."""
    C = build(tid, q, n, modulus)
    report = analyze(C, strategy=strategy, cap=cap, workers=workers, backend=backend)
    v = check_code(tid, q, n, C, report)
    if raise_on_fail and not v.passed:
        raise VerificationFailed(f"T{v.theorem} q={q} n={n}: {v.failures()}", report)
    return v


Builder = Callable[[str, int, int], LinearCode]
