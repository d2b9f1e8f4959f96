from __future__ import annotations

import numpy as np

from pairmds import field_of_order
from pairmds.code import LinearCode, from_generator
from pairmds.linalg import FMatrix, rank

SMALL_QS = (2, 3, 4, 5, 7)


def random_code(rng: np.random.Generator, q: int, n: int, k: int) -> LinearCode:
    """Random full-rank [n, k] code over GF(q)."""
    f = field_of_order(q)
    while True:
        G = FMatrix(f, rng.integers(0, q, size=(k, n)))
        if rank(G) == k:
            return from_generator(G)


def random_small_codes(seed: int, count: int, max_q: int = 7, max_n: int = 10, max_k: int = 6,
                       budget: int = 200_000) -> list[LinearCode]:
    """Codes with q <= max_q, n <= max_n, k <= max_k and q^k <= budget."""
    rng = np.random.default_rng(seed)
    qs = [q for q in SMALL_QS if q <= max_q]
    out = []
    while len(out) < count:
        q = int(rng.choice(qs))
        n = int(rng.integers(2, max_n + 1))
        k = int(rng.integers(1, min(n, max_k) + 1))
        if q**k > budget:
            continue
        out.append(random_code(rng, q, n, k))
    return out


def oracle_field(f):
    from oracle import OracleField
    return OracleField(f.p, f.m, f.modulus)
