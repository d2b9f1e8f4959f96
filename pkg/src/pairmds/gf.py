"""Small finite fields GF(p^m) with table-driven arithmetic.

Elements are identified with their canonical index ``sum(c_i * p**i)`` where
``c_0 .. c_{m-1}`` are the coefficients of the residue polynomial.  Index 0 is
zero and index 1 is one.  Every :class:`FieldSpec` carries full ``q x q``
addition and multiplication tables, which is what the matrix and kernel
layers actually consume; :class:`FieldElement` is the scalar convenience
wrapper on top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NoSuchRoot,
    NotPrime,
    ReducibleModulus,
)

MAX_ORDER = 128


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m``, or None when q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 else None
    return None


# -- polynomials over GF(p), coefficient lists low -> high --------------------
def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim([x % p for x in a])
    b = _poly_trim([x % p for x in b])
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        _poly_trim(a)
    return a


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. m//2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_rem(list(modulus), list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible by ``(c_0, ..., c_{m-1})``."""
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        cand = tuple(low) + (1,)
        if cand[0] != 0 and is_irreducible(cand, p):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int
    modulus: tuple[int, ...]
    add_table: np.ndarray = field(init=False, repr=False, compare=False)
    mul_table: np.ndarray = field(init=False, repr=False, compare=False)
    neg_table: np.ndarray = field(init=False, repr=False, compare=False)
    inv_table: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, m, q = self.p, self.m, self.p**self.m
        idx = np.arange(q)
        weights = p ** np.arange(m)
        coeffs = (idx[:, None] // weights[None, :]) % p  # (q, m)

        add = ((coeffs[:, None, :] + coeffs[None, :, :]) % p) @ weights
        neg = ((-coeffs) % p) @ weights

        # xpow[i] = coefficient vectors of a * x^i for every element a
        red = np.array(self.modulus[:m], dtype=np.int64)
        xpow = np.empty((m, q, m), dtype=np.int64)
        xpow[0] = coeffs
        for i in range(1, m):
            prev = xpow[i - 1]
            top = prev[:, m - 1]
            shifted = np.zeros_like(prev)
            shifted[:, 1:] = prev[:, :-1]
            xpow[i] = (shifted - top[:, None] * red[None, :]) % p
        prod = np.zeros((q, q, m), dtype=np.int64)
        for i in range(m):
            prod += coeffs[None, :, i, None] * xpow[i][:, None, :]
        mul = (prod % p) @ weights

        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols

        for name, table in (("add_table", add), ("mul_table", mul),
                            ("neg_table", neg), ("inv_table", inv)):
            table = np.ascontiguousarray(table, dtype=np.int64)
            table.setflags(write=False)
            object.__setattr__(self, name, table)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def sub_table(self) -> np.ndarray:
        return self.add_table[:, self.neg_table]

    def __str__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.q}; {_poly_str(self.modulus)})"

    def __len__(self) -> int:
        return self.q

    def __call__(self, value) -> "FieldElement":
        """Coerce an index, coefficient sequence or element into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        return self.element(int(value))

    def element(self, index: int) -> "FieldElement":
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} out of range for {self}")
        return FieldElement(self, index)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise DegreeMismatch(f"{len(coeffs)} coefficients for degree-{self.m} field")
        return FieldElement(self, sum((c % self.p) * self.p**i for i, c in enumerate(coeffs)))

    def coeffs(self, index: int) -> tuple[int, ...]:
        return tuple((index // self.p**i) % self.p for i in range(self.m))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, i) for i in range(self.q)]

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    # scalar index arithmetic, used by the pure-python paths
    def iadd(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def imul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def iinv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.inv_table[a])

    def ipow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.iinv(a), -e
        result = 1
        while e:
            if e & 1:
                result = int(self.mul_table[result, a])
            a = int(self.mul_table[a, a])
            e >>= 1
        return result

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = int(self.mul_table[x, a])
            k += 1
        return k


def _poly_str(coeffs, var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    index: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field} elements")
            return other.index
        if isinstance(other, int):
            # integers embed through the prime subfield
            return other % self.field.p
        return NotImplemented

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.index)

    def __int__(self) -> int:
        return self.index

    def __index__(self) -> int:
        return self.index

    def __bool__(self) -> bool:
        return self.index != 0

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, int(self.field.add_table[self.index, b]))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg_table[self.index]))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, int(self.field.add_table[self.index, self.field.neg_table[b]]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, int(self.field.mul_table[self.index, b]))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.iinv(self.index))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self * FieldElement(self.field, self.field.iinv(b))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if self.index == 0 and e < 0:
            raise DivisionByZero("negative power of zero")
        return FieldElement(self.field, self.field.ipow(self.index, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self.index == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.field.modulus, self.index))

    def __repr__(self) -> str:
        return f"{self.field}[{self.index}]"

    def __str__(self) -> str:
        if self.field.m == 1:
            return str(self.index)
        return _poly_str(self.coeffs, "a")


@lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def field_new(p: int, m: int = 1, modulus=None) -> FieldSpec:
    """Validate parameters and return the (cached) field GF(p^m).

    With ``modulus`` omitted the lexicographically smallest monic irreducible
    is used, which gives x^2+x+1 for GF(4) and x^2+1 for GF(9).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise DegreeMismatch(f"degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise FieldTooLarge(f"GF({p}^{m}) exceeds the supported order {MAX_ORDER}")
    if modulus is None:
        modulus = smallest_irreducible(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1:
            raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, field degree is {m}")
        if modulus[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if m > 1 and not is_irreducible(modulus, p):
            raise ReducibleModulus(f"{_poly_str(modulus)} is reducible over GF({p})")
    return _field_cached(p, m, modulus)


def field_of_order(q: int, modulus=None) -> FieldSpec:
    pm = prime_power(q)
    if pm is None:
        raise NotPrime(f"q must be a prime power, got {q}")
    return field_new(pm[0], pm[1], modulus)


def all_elements(f: FieldSpec) -> list[FieldElement]:
    return f.elements()


def primitive_element(f: FieldSpec) -> FieldElement:
    """The generator of the multiplicative group with the smallest index."""
    for a in range(1, f.q):
        if f.order_of(a) == f.q - 1:
            return FieldElement(f, a)
    raise AssertionError("unreachable: multiplicative group is cyclic")


def root_of_unity(f: FieldSpec, r: int) -> FieldElement:
    """A primitive r-th root of unity: ``g^((q-1)/r)`` for the smallest primitive g.

    This reproduces omega = 2 in GF(5) and GF(7), alpha in GF(4) and 2*alpha
    in GF(9) (modulus x^2+1).
    """
    if r < 1 or (f.q - 1) % r:
        raise NoSuchRoot(f"no primitive {r}-th root of unity in {f}: {r} does not divide {f.q - 1}")
    return primitive_element(f) ** ((f.q - 1) // r)
