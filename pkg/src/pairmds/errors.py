"""Exception hierarchy.

Every error raised by the package derives from :class:`PairMdsError`, so the
CLI can map the whole family onto exit status 2 with one ``except`` clause.
Subclasses also inherit from the closest builtin so callers that only know
about ``ValueError``/``ZeroDivisionError`` still catch them.
"""

from __future__ import annotations


class PairMdsError(Exception):
    """Base class for all package errors."""


# -- fields -----------------------------------------------------------------
class NotPrime(PairMdsError, ValueError):
    pass


class ReducibleModulus(PairMdsError, ValueError):
    pass


class DegreeMismatch(PairMdsError, ValueError):
    pass


class FieldTooLarge(PairMdsError, ValueError):
    pass


class FieldMismatch(PairMdsError, ValueError):
    pass


class DivisionByZero(PairMdsError, ZeroDivisionError):
    pass


class NoSuchRoot(PairMdsError, ValueError):
    pass


# -- linear algebra ---------------------------------------------------------
class SingularMatrix(PairMdsError, ValueError):
    pass


class DimensionMismatch(PairMdsError, ValueError):
    pass


class IndexOutOfRange(PairMdsError, IndexError):
    pass


# -- codes ------------------------------------------------------------------
class RankDeficientParity(PairMdsError, ValueError):
    pass


class DuplicatePoints(PairMdsError, ValueError):
    pass


class BadRedundancy(PairMdsError, ValueError):
    pass


class EnumerationTooLarge(PairMdsError, RuntimeError):
    pass


class ZeroCode(PairMdsError, ValueError):
    pass


class MissingParity(PairMdsError, ValueError):
    pass


class MalformedCodeFile(PairMdsError, ValueError):
    pass


# -- matrix-product codes ---------------------------------------------------
class ShapeError(PairMdsError, ValueError):
    pass


class RankDeficientA(PairMdsError, ValueError):
    pass


class NonSquareA(PairMdsError, ValueError):
    pass


class SingularA(PairMdsError, ValueError):
    pass


class NotNsc(PairMdsError, ValueError):
    pass


# -- symbol-pair metric -----------------------------------------------------
class TooShort(PairMdsError, ValueError):
    pass


class BoundViolation(PairMdsError, ArithmeticError):
    """A computed distance broke the pair Singleton bound (internal bug)."""


# -- permutations -----------------------------------------------------------
class SizeMismatch(PairMdsError, ValueError):
    pass


# -- constructions ----------------------------------------------------------
class InadmissibleParameters(PairMdsError, ValueError):
    pass


class TooLong(PairMdsError, ValueError):
    pass


class VerificationFailed(PairMdsError, AssertionError):
    """A constructed code did not meet its theorem; ``report`` has the details."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
