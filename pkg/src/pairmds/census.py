"""Low-weight support structure of the (unpermuted) matrix-product codes.

A census lists every exact codeword support of a given weight, grouped by how
the support splits across the length-n blocks.  The clause tables below
describe, per family, which splits may occur and which linear relation the
evaluation points must satisfy; :func:`check_lemma` compares the two.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, islice
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .code import LinearCode, _tables, codeword_batches, enumeration_cap
from .errors import EnumerationTooLarge, InadmissibleParameters
from .gf import FieldSpec
from .mp import MpSpec, mp_code

Groups = tuple[tuple[int, ...], ...]  # within-block indices, one tuple per nonzero block
Condition = Callable[[FieldSpec, Sequence[int], Groups, int], bool]

SUPPORT_LIMIT = 5_000_000


def split_support(support: Sequence[int], n: int) -> tuple[tuple[int, ...], Groups]:
    """(blocks touched, within-block indices per touched block) of a sorted support."""
    by_block: dict[int, list[int]] = {}
    for i in support:
        by_block.setdefault(i // n, []).append(i % n)
    blocks = tuple(sorted(by_block))
    return blocks, tuple(tuple(by_block[b]) for b in blocks)


def pattern_of(groups: Groups) -> tuple[int, ...]:
    return tuple(sorted((len(g) for g in groups), reverse=True))


@dataclass
class Census:
    weight: int
    n: int
    blocks: int
    supports: list[tuple[int, ...]]
    checked: int

    def patterns(self) -> Counter:
        return Counter(pattern_of(split_support(s, self.n)[1]) for s in self.supports)

    def grouped(self) -> list[tuple[tuple[int, ...], Groups]]:
        return [split_support(s, self.n) for s in self.supports]


def support_census(C: LinearCode, weight: int, block_len: int, backend: str | None = None,
                   limit: int = SUPPORT_LIMIT) -> Census:
    """Every exact weight-``weight`` support of C, in lexicographic order."""
    from math import comb

    n = C.n
    total = comb(n, weight)
    if total > limit:
        raise EnumerationTooLarge(f"C({n},{weight}) = {total} supports exceed the census limit {limit}")
    impl = kernels.get_backend(backend)
    H = np.ascontiguousarray(C.parity().data)
    T = _tables(C.field)
    found: list[tuple[int, ...]] = []
    it = combinations(range(n), weight)
    while True:
        chunk = list(islice(it, 1 << 16))
        if not chunk:
            break
        S = np.array(chunk, dtype=np.int64).reshape(len(chunk), weight)
        ok = np.asarray(impl.realizable(H, S, *T, C.q, True))
        found.extend(chunk[i] for i in np.flatnonzero(ok))
    return Census(weight, block_len, n // block_len, found, total)


# -- clause conditions -------------------------------------------------------
# each takes (field, evaluation points, groups, omega)
def _sum(f: FieldSpec, vals) -> int:
    s = 0
    for v in vals:
        s = f.add_table[s, v]
    return int(s)


def equal_group_sums(f: FieldSpec, points, groups: Groups, omega: int = 1) -> bool:
    sums = {_sum(f, (points[i] for i in g)) for g in groups}
    return len(sums) == 1


def equal_points(f: FieldSpec, points, groups: Groups, omega: int = 1) -> bool:
    return len({points[i] for g in groups for i in g}) == 1


def _pairings(vals):
    a, b, c, d = vals
    return (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c)))


def pairable_equal_sums(f: FieldSpec, points, groups: Groups, omega: int = 1) -> bool:
    """The four points split into two pairs with equal sums (blocks may be labelled in any order)."""
    flat = [points[i] for g in groups for i in g]
    return any(_sum(f, x) == _sum(f, y) for x, y in _pairings(flat))


def pairable_equal_points(f: FieldSpec, points, groups: Groups, omega: int = 1) -> bool:
    """The four points split into two pairs of equal points."""
    flat = [points[i] for g in groups for i in g]
    return any(x[0] == x[1] and y[0] == y[1] for x, y in _pairings(flat))


def weighted_group_sums(f: FieldSpec, points, groups: Groups, omega: int = 1) -> bool:
    """``sum_j omega^j s_j = 0`` over the block sums s_j; needs every block occupied."""
    acc = 0
    for j, g in enumerate(groups):
        acc = f.add_table[acc, f.mul_table[f.ipow(omega, j), _sum(f, (points[i] for i in g))]]
    return int(acc) == 0


def same_index_sets(f: FieldSpec, points, groups: Groups, omega: int = 1) -> bool:
    """Every block uses the same evaluation points (pairs mirror each other)."""
    return len({frozenset(points[i] for i in g) for g in groups}) == 1


def points_drawn_from_pair(f: FieldSpec, points, groups: Groups, omega: int = 1) -> bool:
    """The largest block has two points; every other point repeats one of them."""
    big = max(groups, key=len)
    allowed = {points[i] for i in big}
    return len(big) == 2 and all(points[i] in allowed for g in groups for i in g)


@dataclass(frozen=True)
class Clause:
    weight: int
    allowed: dict[tuple[int, ...], Condition | None]
    # relations evaluated and reported alongside, never part of the verdict
    observed: dict[tuple[int, ...], Condition] = field(default_factory=dict)


@dataclass(frozen=True)
class LemmaSpec:
    id: str
    theorem: str
    clauses: tuple[Clause, ...]
    min_weight: int
    strict_conditions: bool = True


LEMMAS: dict[str, LemmaSpec] = {
    "3.1": LemmaSpec("3.1", "3.1", (
        Clause(4, {(4,): None}),
        Clause(5, {(5,): None}),
        Clause(6, {(6,): None, (3, 3): None, (2, 2, 2): equal_group_sums},
               observed={(2, 2, 2): weighted_group_sums}),
    ), min_weight=4),
    "3.2": LemmaSpec("3.2", "3.2", (
        Clause(4, {(4,): None, (2, 2): equal_group_sums}),
        Clause(5, {(5,): None, (3, 2): None}),
    ), min_weight=4),
    "3.3": LemmaSpec("3.3", "3.3", (
        Clause(5, {(5,): None}),
        Clause(6, {(6,): None, (3, 3): equal_group_sums}),
        Clause(7, {(7,): None, (4, 3): None}),
        Clause(8, {(8,): None, (5, 3): None, (4, 4): None}),
    ), min_weight=5),
    "3.4": LemmaSpec("3.4", "3.4", (
        Clause(3, {(1, 1, 1): equal_points}),
        Clause(4, {(4,): None, (2, 2): None, (2, 1, 1): None, (1, 1, 1, 1): pairable_equal_sums}),
    ), min_weight=3),
    # index conditions of this family are reported, not enforced
    "3.5": LemmaSpec("3.5", "3.5", (
        Clause(4, {(2, 2): same_index_sets, (1, 1, 1, 1): pairable_equal_points}),
        Clause(5, {(5,): None, (3, 2): None, (2, 1, 1, 1): points_drawn_from_pair}),
    ), min_weight=4, strict_conditions=False),
}


@dataclass
class ClauseResult:
    weight: int
    total: int
    patterns: dict[tuple[int, ...], int]
    unlisted: dict[tuple[int, ...], int]
    condition_failures: dict[tuple[int, ...], list[tuple[int, ...]]]
    enforced: bool
    observed: dict[str, tuple[int, int]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.unlisted and (not self.enforced or not self.condition_failures)


@dataclass
class LemmaResult:
    lemma: str
    q: int
    n: int
    rows: list[ClauseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def lines(self) -> list[str]:
        out = []
        for r in self.rows:
            verdict = "PASS" if r.passed else "FAIL"
            pats = ", ".join(f"{'+'.join(map(str, p))}: {c}" for p, c in sorted(r.patterns.items()))
            line = f"w={r.weight} supports={r.total} patterns={{{pats}}} {verdict}"
            if r.unlisted:
                line += f" unlisted={sorted(r.unlisted)}"
            if r.condition_failures:
                bad = {"+".join(map(str, p)): len(v) for p, v in r.condition_failures.items()}
                tag = "condition_failures" if r.enforced else "condition_mismatches(reported)"
                line += f" {tag}={bad}"
            for name, (ok, tot) in r.observed.items():
                line += f" observed[{name}]={ok}/{tot}"
            out.append(line)
        return out


def lemma_spec(lemma_id) -> LemmaSpec:
    key = str(lemma_id)
    if key not in LEMMAS:
        raise InadmissibleParameters(f"unknown lemma {lemma_id!r}; expected one of {sorted(LEMMAS)} or 2.3")
    return LEMMAS[key]


def check_lemma(lemma_id, q: int, n: int, modulus=None, backend: str | None = None) -> LemmaResult:
    """Census every clause weight (and all smaller weights) and compare with the clause table."""
    from .construct import build_unpermuted, evaluation_vector, theorem
    from .gf import root_of_unity

    spec = lemma_spec(lemma_id)
    C = build_unpermuted(spec.theorem, q, n, modulus)
    points = [a.index for a in evaluation_vector(C.field, n)]
    omega = root_of_unity(C.field, theorem(spec.theorem).M).index
    result = LemmaResult(spec.id, q, n)
    for w in range(1, spec.min_weight):
        cen = support_census(C, w, n, backend)
        result.rows.append(ClauseResult(w, len(cen.supports), dict(cen.patterns()),
                                        dict(cen.patterns()), {}, True))
    for clause in spec.clauses:
        cen = support_census(C, clause.weight, n, backend)
        counts: Counter = Counter()
        unlisted: Counter = Counter()
        failures: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        observed: dict[str, list[int]] = {}
        for s in cen.supports:
            _, groups = split_support(s, n)
            pat = pattern_of(groups)
            counts[pat] += 1
            for opat, ocond in clause.observed.items():
                if opat == pat:
                    tally = observed.setdefault(f"{'+'.join(map(str, pat))}:{ocond.__name__}", [0, 0])
                    tally[0] += bool(ocond(C.field, points, groups, omega))
                    tally[1] += 1
            if pat not in clause.allowed:
                unlisted[pat] += 1
                continue
            cond = clause.allowed[pat]
            if cond is not None and not cond(C.field, points, groups, omega):
                failures.setdefault(pat, []).append(s)
        result.rows.append(ClauseResult(clause.weight, len(cen.supports), dict(counts), dict(unlisted),
                                        failures, spec.strict_conditions,
                                        {k: (v[0], v[1]) for k, v in observed.items()}))
    return result


def zero_block_check(spec: MpSpec, cap: int | None = None) -> tuple[bool, int]:
    """Nested-constituent zero-block property over every codeword of the MP code.

    A codeword with exactly z zero blocks (1 <= z < M) must have every block in
    constituent z+1; with z >= M zero blocks it must vanish.  Returns
    ``(holds, codewords checked)``.
    """
    C = mp_code(spec)
    cap = enumeration_cap(cap)
    if C.q**C.k > cap:
        raise EnumerationTooLarge(f"{C.q}^{C.k} codewords exceed the enumeration cap {cap}")
    f, n, N, M = spec.field, spec.n, spec.N, spec.M
    parities = [c.parity().data for c in spec.constituents]
    checked = 0
    for batch in codeword_batches(C, cap=cap):
        blocks = batch.reshape(batch.shape[0], N, n)
        zero = ~blocks.any(axis=2)
        z = zero.sum(axis=1)
        checked += batch.shape[0]
        if np.any((z >= M) & blocks.any(axis=(1, 2))):
            return False, checked
        for k in range(1, M):
            sel = blocks[z == k]
            Hk = parities[k]
            if sel.size == 0 or Hk.shape[0] == 0:
                continue
            # syndromes of every block against H_{k+1}
            acc = np.zeros(sel.shape[:2] + (Hk.shape[0],), dtype=np.int64)
            for t in range(n):
                acc = f.add_table[acc, f.mul_table[sel[:, :, t, None], Hk[None, None, :, t]]]
            if acc.any():
                return False, checked
    return True, checked
