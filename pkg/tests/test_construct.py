from __future__ import annotations

import pytest

import golden
from pairmds import field_of_order
from pairmds.construct import (
    EXAMPLES,
    THEOREMS,
    build,
    build_unpermuted,
    coset_ordering,
    evaluation_vector,
    permutation,
    theorem,
    verify,
)
from pairmds.errors import InadmissibleParameters, TooLong, VerificationFailed
from pairmds.linalg import FMatrix, mat_mul

GOLDEN = {
    "3.1": (golden.EX31_H_MP, golden.EX31_H, golden.EX31_G),
    "3.2": (golden.EX32_H_MP, golden.EX32_H, golden.EX32_G),
    "3.3": (golden.EX33_H_MP, golden.EX33_H, golden.EX33_G),
    "3.4": (golden.EX34_H_MP, golden.EX34_H, None),
    "3.5": (golden.EX35_H_MP, golden.EX35_H, None),
}


@pytest.mark.parametrize("ex", sorted(EXAMPLES))
def test_example_matrices(ex):
    tid, q, n = EXAMPLES[ex]
    C, D = build_unpermuted(tid, q, n), build(tid, q, n)
    f = C.field
    h_mp, h, g = GOLDEN[ex]
    assert FMatrix(f, h_mp).same_row_space(C.H)
    assert FMatrix(f, h).same_row_space(D.H)
    assert mat_mul(D.G, D.H.T).is_zero()
    if g is not None:
        assert FMatrix(f, g).same_row_space(D.G)


def test_gf9_parity_is_entrywise():
    # with omega = xi^2 the parity matrices agree entry for entry, not just up to row operations
    assert build_unpermuted("3.5", 9, 6).H.to_lists() == [list(r) for r in golden.EX35_H_MP]
    assert build("3.5", 9, 6).H.to_lists() == [list(r) for r in golden.EX35_H]


def test_coset_ordering():
    assert [a.index for a in coset_ordering(field_of_order(9))] == list(range(9))
    assert [a.index for a in evaluation_vector(field_of_order(7), 4)] == [0, 1, 2, 3]
    with pytest.raises(TooLong):
        evaluation_vector(field_of_order(5), 6)


@pytest.mark.parametrize("tid,q,n,msg", [
    ("3.1", 6, 4, "prime power"),
    ("3.1", 5, 4, "q = 1 mod 3"),
    ("3.2", 4, 4, "odd"),
    ("3.4", 9, 5, "characteristic"),
    ("3.1", 7, 3, "n must lie"),
    ("3.3", 7, 8, "n must lie"),
])
def test_inadmissible(tid, q, n, msg):
    with pytest.raises(InadmissibleParameters, match=msg):
        build(tid, q, n)
    assert not theorem(tid).admissible(q, n)


def test_theorem_lookup():
    assert theorem("T3.4") is THEOREMS["3.4"]
    with pytest.raises(InadmissibleParameters):
        theorem("3.9")


@pytest.mark.parametrize("tid", sorted(THEOREMS))
def test_dimension_formula(tid):
    th = THEOREMS[tid]
    q = {"3.1": 7, "3.2": 7, "3.3": 7, "3.4": 5, "3.5": 9}[tid]
    for n in th.n_range(q):
        C = build(tid, q, n)
        assert (C.n, C.k) == (th.M * n, th.dimension(n))
        assert mat_mul(C.G, C.H.T).is_zero()


def test_provenance():
    C = build("3.2", 7, 4)
    p = C.provenance
    assert (p["theorem"], p["q"], p["n"], p["omega"], p["points"]) == ("3.2", 7, 4, 2, [0, 1, 2, 3])
    assert p["permutation"] == permutation("3.2", 4).to_list()
    assert [c["redundancy"] for c in p["mp"]["constituents"]] == [1, 1, 3]


def test_verify_example():
    v = verify("3.4", 5, 5)
    assert v.passed and v.report.d_sp == 6


def test_verify_raises_on_mismatch():
    # T3.1 at (q, n) = (7, 5) has d_sp = 7 rather than 8
    with pytest.raises(VerificationFailed) as exc:
        verify("3.1", 7, 5)
    assert exc.value.report.d_sp == 7
    v = verify("3.1", 7, 5, raise_on_fail=False)
    assert v.failures() == {"d_sp": (8, 7), "class": ("MDS", "AMDS")}
