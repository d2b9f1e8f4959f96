"""The compiled and pure-numpy kernels must agree call for call."""

from __future__ import annotations

import itertools
import os
import subprocess
import sys

import numpy as np
import pytest

from helpers import random_code
from pairmds import kernels
from pairmds.code import _tables
from pairmds.construct import build

NB, NP = kernels.get_backend("numba"), kernels.get_backend("numpy")


def _cases(seed, count):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        q = int(rng.choice([2, 3, 4, 5, 7, 9]))
        n = int(rng.integers(3, 10))
        k = int(rng.integers(1, n))
        if q**k > 50_000:
            continue
        out.append(random_code(rng, q, n, k))
    return out


@pytest.mark.parametrize("C", _cases(1, 20), ids=repr)
def test_message_minima(C):
    T = _tables(C.field)
    a = NB.message_minima(np.ascontiguousarray(C.G.data), *T, C.q)
    b = NP.message_minima(np.ascontiguousarray(C.G.data), *T, C.q)
    assert a[0].tolist() == b[0].tolist()
    assert a[1].tolist() == b[1].tolist()
    assert int(a[2]) == int(b[2]) == (C.q**C.k - 1) // (C.q - 1)


@pytest.mark.parametrize("C", _cases(2, 20), ids=repr)
def test_support_kernels(C):
    T = _tables(C.field)
    H = np.ascontiguousarray(C.parity().data)
    firsts = np.arange(C.n, dtype=np.int64)
    for w in range(1, C.n):
        a = NB.first_dependent_support(H, w, firsts, *T, C.q)
        b = NP.first_dependent_support(H, w, firsts, *T, C.q)
        assert bool(a[0]) == bool(b[0])
        if a[0]:
            assert a[1].tolist() == b[1].tolist()
        sa = NB.scan_pair_supports(H, w, C.n + 1, firsts, *T, C.q)
        sb = NP.scan_pair_supports(H, w, C.n + 1, firsts, *T, C.q)
        assert int(sa[0]) == int(sb[0])
        if int(sa[0]) <= C.n:
            assert list(sa[1]) == list(sb[1])
    w = min(3, C.n)
    sups = np.array(list(itertools.combinations(range(C.n), w)), dtype=np.int64)
    for exact in (True, False):
        assert (NB.realizable(H, sups, *T, C.q, exact).tolist()
                == NP.realizable(H, sups, *T, C.q, exact).tolist())


def test_batch_pair_weights():
    rng = np.random.default_rng(0)
    X = rng.integers(0, 3, size=(500, 11)) * (rng.random((500, 11)) < 0.4)
    a, b = NB.batch_pair_weights(X), NP.batch_pair_weights(X)
    assert a[0].tolist() == b[0].tolist() and a[1].tolist() == b[1].tolist()


@pytest.mark.parametrize("tid,q,n", [("3.4", 5, 5), ("3.5", 9, 6), ("3.3", 7, 5)])
def test_analysis_agrees_on_constructions(tid, q, n):
    from pairmds.sympair import analyze

    C = build(tid, q, n)
    a = analyze(C, strategy="support", backend="numba")
    b = analyze(C, strategy="support", backend="numpy")
    assert (a.d_H, a.d_sp, a.witness_H, a.witness_sp) == (b.d_H, b.d_sp, b.witness_H, b.witness_sp)


def test_env_flag_selects_backend(monkeypatch):
    monkeypatch.setenv("PAIRMDS_NUMBA", "0")
    assert kernels.default_backend() == "numpy"
    assert kernels.get_backend() is NP
    monkeypatch.setenv("PAIRMDS_NUMBA", "1")
    assert kernels.default_backend() == "numba"
    with pytest.raises(ValueError):
        kernels.get_backend("cuda")


def test_numpy_fallback_end_to_end():
    code = ("from pairmds import kernels; from pairmds.sympair import analyze; "
            "from pairmds.construct import build; "
            "r = analyze(build('3.1', 4, 4), strategy='support'); "
            "print(kernels.default_backend(), r.d_H, r.d_sp)")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env=dict(os.environ, PAIRMDS_NUMBA="0"), check=True)
    assert out.stdout.split() == ["numpy", "4", "8"]
