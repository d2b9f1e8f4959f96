"""Coordinate permutations and the block interleavers used by the constructions.

Convention: ``PermutationMap.map[l]`` is the destination of source coordinate
``l``.  Applying it to a word ``c`` gives ``d`` with ``d[map[l]] = c[l]``.
:meth:`PermutationMap.listing` reads the other way round: for each
destination slot it names the source coordinate found there (1-indexed),
which is how interleavers are usually displayed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import SizeMismatch


@dataclass(frozen=True)
class PermutationMap:
    map: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.map)
        object.__setattr__(self, "map", m)
        if sorted(m) != list(range(len(m))):
            raise ValueError(f"not a bijection on [0, {len(m)}): {m}")

    @property
    def n(self) -> int:
        return len(self.map)

    @classmethod
    def identity(cls, n: int) -> "PermutationMap":
        return cls(tuple(range(n)))

    @classmethod
    def from_listing(cls, listing: Sequence[int]) -> "PermutationMap":
        """Inverse of :meth:`listing`: ``listing[t]`` is the 1-indexed source at slot t."""
        dest = [0] * len(listing)
        for t, src in enumerate(listing):
            dest[src - 1] = t
        return cls(tuple(dest))

    def __call__(self, l: int) -> int:
        return self.map[l]

    def listing(self) -> tuple[int, ...]:
        src = [0] * self.n
        for l, t in enumerate(self.map):
            src[t] = l + 1
        return tuple(src)

    def apply_vector(self, v) -> np.ndarray:
        v = np.asarray(v)
        if v.shape[-1] != self.n:
            raise SizeMismatch(f"vector length {v.shape[-1]} != permutation size {self.n}")
        out = np.empty_like(v)
        out[..., list(self.map)] = v
        return out

    def to_list(self) -> list[int]:
        return list(self.map)


def compose(outer: PermutationMap, inner: PermutationMap) -> PermutationMap:
    """``outer o inner``: apply ``inner`` first."""
    if outer.n != inner.n:
        raise SizeMismatch(f"cannot compose permutations of sizes {outer.n} and {inner.n}")
    return PermutationMap(tuple(outer.map[t] for t in inner.map))


def invert(pi: PermutationMap) -> PermutationMap:
    inv = [0] * pi.n
    for l, t in enumerate(pi.map):
        inv[t] = l
    return PermutationMap(tuple(inv))


def rho(M: int, n: int) -> PermutationMap:
    """Block interleaver on M*n coordinates: ``i*n + j -> i + M*j``."""
    if M < 1 or n < 1:
        raise ValueError("M and n must be positive")
    return PermutationMap(tuple(i + M * j for i in range(M) for j in range(n)))


def _residue_shifts(M: int, n: int, moves: dict[int, tuple[int, int]]) -> PermutationMap:
    """Send ``r + M*j`` to ``r' + M*((j + s) mod n)`` for each ``r -> (r', s)``; other residues stay."""
    dest = list(range(M * n))
    for r, (r2, s) in moves.items():
        for j in range(n):
            dest[r + M * j] = r2 + M * ((j + s) % n)
    return PermutationMap(tuple(dest))


def phi(n: int) -> PermutationMap:
    """On 3n coordinates: rotate residue class 1 back by one step, fix classes 0 and 2."""
    return _residue_shifts(3, n, {1: (1, -1)})


def tau_v1(n: int) -> PermutationMap:
    """On 4n coordinates: class 0 moves back two steps, class 2 back one, classes 1 and 3 fixed."""
    return _residue_shifts(4, n, {0: (0, -2), 2: (2, -1)})


def tau_v2(n: int) -> PermutationMap:
    """On 4n coordinates: classes 1 and 2 trade places with shifts -1 and +1; 0 and 3 fixed."""
    return _residue_shifts(4, n, {1: (2, -1), 2: (1, 1)})


def interleaver(kind: str, n: int) -> PermutationMap:
    """The composed permutation (shift after block interleave) for a construction family."""
    if kind == "phi":
        return compose(phi(n), rho(3, n))
    if kind == "tau_v1":
        return compose(tau_v1(n), rho(4, n))
    if kind == "tau_v2":
        return compose(tau_v2(n), rho(4, n))
    raise ValueError(f"unknown interleaver {kind!r}")


def apply(C, pi: PermutationMap):
    """Permute the generator and parity-check columns of a LinearCode."""
    from .code import LinearCode
    from .linalg import FMatrix

    if pi.n != C.n:
        raise SizeMismatch(f"permutation size {pi.n} != code length {C.n}")
    G = FMatrix(C.field, pi.apply_vector(C.G.data))
    H = None if C.H is None else FMatrix(C.field, pi.apply_vector(C.H.data))
    return LinearCode(C.field, C.n, C.k, G, H, dict(C.provenance))
