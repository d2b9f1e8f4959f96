from __future__ import annotations

import numpy as np
import pytest

import oracle
from helpers import oracle_field
from pairmds import field_of_order
from pairmds.code import LinearCode, full_space, grs, min_hamming_distance
from pairmds.construct import mp_spec
from pairmds.errors import MissingParity, NonSquareA, NotNsc, RankDeficientA, ShapeError, SingularA
from pairmds.linalg import FMatrix, inverse, mat_mul
from pairmds.mp import (
    MpSpec,
    is_nsc,
    mp_code,
    mp_dual,
    mp_generator,
    mp_parity,
    product_distance_bound,
    standard_A,
)

SWEEP_FIELDS = {3: (4, 7, 13), 4: (5, 9, 13)}


def test_standard_A_values():
    assert standard_A(field_of_order(7), 3).to_lists() == [[1, 1, 1], [1, 2, 4], [1, 4, 2]]
    assert standard_A(field_of_order(5), 4).to_lists() == [
        [1, 1, 1, 1], [1, 2, 4, 3], [1, 4, 1, 4], [1, 3, 4, 2]]


def test_inverse_transpose_values():
    # (A^-1)^T up to the printed scalar 1/M
    f7 = field_of_order(7)
    B = inverse(standard_A(f7, 3)).T.scale(3)
    assert B.to_lists() == [[1, 1, 1], [1, 4, 2], [1, 2, 4]]
    f5 = field_of_order(5)
    B = inverse(standard_A(f5, 4)).T.scale(4)
    assert B.to_lists() == [[1, 1, 1, 1], [1, 3, 4, 2], [1, 4, 1, 4], [1, 2, 4, 3]]


@pytest.mark.parametrize("M,q", [(M, q) for M, qs in SWEEP_FIELDS.items() for q in qs])
def test_standard_A_is_nsc(M, q):
    assert is_nsc(standard_A(field_of_order(q), M))


def test_nsc_negative_and_shape():
    f = field_of_order(5)
    assert not is_nsc(FMatrix(f, [[1, 1], [1, 1]]))
    assert not is_nsc(FMatrix(f, [[0, 1], [1, 1]]))
    with pytest.raises(ShapeError):
        is_nsc(FMatrix(f, [[1], [1]]))


def _nested(f, n, reds):
    pts = list(range(n))
    return tuple(full_space(f, n) if r == 0 else grs(f, pts, r) for r in reds)


@pytest.mark.parametrize("q,M,reds", [(7, 3, (1, 2, 3)), (4, 3, (1, 2, 3)), (5, 4, (0, 0, 1, 3)),
                                      (9, 4, (0, 1, 1, 4)), (7, 3, (2, 2, 4))])
def test_generator_parity_orthogonal(q, M, reds):
    f = field_of_order(q)
    n = 5 if q > 4 else 4
    spec = MpSpec(_nested(f, n, reds), standard_A(f, M))
    C = mp_code(spec)
    assert C.n == M * n and C.k == M * n - sum(reds)
    assert mat_mul(C.G, C.H.T).is_zero()
    assert mp_dual(spec).same_code(LinearCode(f, C.n, C.H.rows, C.H))


def test_mp_matches_block_definition():
    # every codeword is (c_1, ..., c_M) * A with c_i in C_i
    f = field_of_order(5)
    cs = _nested(f, 4, (1, 2, 3))[:2]
    A = FMatrix(f, [[1, 1], [1, 4]])
    C = mp_generator(MpSpec(cs, A))
    o = oracle_field(f)
    rng = np.random.default_rng(1)
    for _ in range(20):
        m1 = rng.integers(0, 5, cs[0].k)
        m2 = rng.integers(0, 5, cs[1].k)
        c1 = [0] * 4
        c2 = [0] * 4
        for a, row in zip(m1, cs[0].G.to_lists()):
            c1 = [o.add(x, o.mul(int(a), y)) for x, y in zip(c1, row)]
        for a, row in zip(m2, cs[1].G.to_lists()):
            c2 = [o.add(x, o.mul(int(a), y)) for x, y in zip(c2, row)]
        word = [o.add(o.mul(int(A[0, j]), x), o.mul(int(A[1, j]), y)) for j in range(2) for x, y in zip(c1, c2)]
        assert C.contains(word)


def test_mp_errors():
    f = field_of_order(5)
    cs = _nested(f, 4, (1, 2))
    with pytest.raises(RankDeficientA):
        mp_generator(MpSpec(cs, FMatrix(f, [[1, 1], [2, 2]])))
    with pytest.raises(NonSquareA):
        mp_parity(MpSpec(cs, FMatrix(f, [[1, 1, 1], [1, 2, 3]])))
    with pytest.raises(SingularA):
        mp_parity(MpSpec(cs, FMatrix(f, [[1, 1], [2, 2]])))
    bare = LinearCode(f, 4, 3, cs[0].G)
    with pytest.raises(MissingParity):
        mp_parity(MpSpec((bare, cs[1]), standard_A(f, 2)))
    with pytest.raises(NotNsc):
        product_distance_bound(MpSpec(cs, FMatrix(f, [[0, 1], [1, 1]])))


def test_product_distance_bound_holds():
    f = field_of_order(7)
    spec = MpSpec(_nested(f, 4, (1, 2, 3)), standard_A(f, 3))
    bound = product_distance_bound(spec)
    assert bound == min(2 * 3, 3 * 2, 4 * 1)
    C = mp_code(spec)
    assert min_hamming_distance(C)[0] >= bound


def test_oracle_distance_of_small_mp_code():
    spec = mp_spec("3.1", 4, 4)
    C = mp_code(spec)
    dh, _ = oracle.distances(oracle_field(C.field), C.G.to_lists())
    assert dh == min_hamming_distance(C)[0] == 4
