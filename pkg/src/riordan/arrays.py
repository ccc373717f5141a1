"""Riordan pairs, exponential and almost-Riordan arrays, and their matrices."""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import InsufficientOrderError, NormalizationError
from .matrix import ExactMatrix
from .series import Series


def _check_order(n: int, *series: Series) -> None:
    if n < 1:
        raise ValueError("matrix size must be at least 1")
    short = min(s.order for s in series)
    if short < n:
        raise InsufficientOrderError(
            f"series of order {short} cannot fill a {n}x{n} matrix"
        )


def _columns(first: Series, f: Series, n: int) -> list:
    """Coefficient lists of ``first * f^k`` for ``k < n``, truncated to ``n``."""
    col = first.truncate(n)
    f = f.truncate(n)
    cols = []
    for _ in range(n):
        cols.append(col.coeffs)
        col = col * f
    return cols


@dataclass(frozen=True)
class RiordanPair:
    """The array ``(g, f)`` with ``[x^n] g f^k`` at position ``(n, k)``.

    Construction only insists on ``g(0) != 0``, ``f(0) = 0`` and ``f'(0) != 0``
    because intermediate arrays such as ``(-g/(1-f), f)`` leave the
    normalized subgroup.  :meth:`require_normalized` enforces
    ``g(0) = 1, f'(0) = 1`` where an operation needs it.
    """

    g: Series
    f: Series

    def __post_init__(self):
        if not self.g.coeffs[0]:
            raise NormalizationError("g must have nonzero constant term")
        if self.f.order < 2:
            raise NormalizationError("f needs at least two coefficients")
        if self.f.coeffs[0]:
            raise NormalizationError("f must have zero constant term")
        if not self.f.coeffs[1]:
            raise NormalizationError("f must have nonzero linear term")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    @property
    def is_normalized(self) -> bool:
        return self.g.coeffs[0] == 1 and self.f.coeffs[1] == 1

    def require_normalized(self) -> RiordanPair:
        if not self.is_normalized:
            raise NormalizationError("expected g(0) = 1 and f'(0) = 1")
        return self

    @classmethod
    def identity(cls, order: int) -> RiordanPair:
        return cls(Series.one(order), Series.x(order))

    @classmethod
    def pascal(cls, order: int) -> RiordanPair:
        g = Series.geometric(1, order)
        return cls(g, g.shift_up(1))

    def matrix(self, n: int) -> ExactMatrix:
        return riordan_matrix(self, n)

    def __matmul__(self, other):
        if not isinstance(other, RiordanPair):
            return NotImplemented
        return riordan_multiply(self, other)

    def inverse(self) -> RiordanPair:
        return riordan_inverse(self)


def riordan_matrix(p: RiordanPair, n: int) -> ExactMatrix:
    _check_order(n, p.g, p.f)
    return ExactMatrix.from_columns(_columns(p.g, p.f, n), n)


def riordan_multiply(p: RiordanPair, q: RiordanPair) -> RiordanPair:
    """``(g, f) * (u, v) = (g u(f), v(f))``."""
    return RiordanPair(p.g * q.g.compose(p.f), q.f.compose(p.f))


def riordan_inverse(p: RiordanPair) -> RiordanPair:
    """``(1 / g(fbar), fbar)`` with ``fbar`` the compositional inverse of ``f``."""
    fbar = p.f.revert()
    return RiordanPair(p.g.compose(fbar).reciprocal(), fbar)


def ftra_apply(p: RiordanPair, h: Series) -> Series:
    """Action on a column: ``(g, f) . h = g * h(f)``."""
    return p.g * h.compose(p.f)


def row_sums(p: RiordanPair, n: int) -> Series:
    """Row sums via their generating function ``g / (1 - f)``."""
    _check_order(n, p.g, p.f)
    return (p.g.truncate(n) / (1 - p.f.truncate(n)))


def diagonal_sums(p: RiordanPair, n: int) -> Series:
    """Diagonal sums via ``g / (1 - x f)``."""
    _check_order(n, p.g, p.f)
    f = p.f.truncate(n)
    return p.g.truncate(n) / (1 - f.shift_up(1))


@dataclass(frozen=True)
class ExpRiordanPair:
    """Exponential array ``[g, f]``; entry ``(n, k)`` is ``n!/k! [x^n] g f^k``."""

    g: Series
    f: Series

    def __post_init__(self):
        if self.g.coeffs[0] != 1:
            raise NormalizationError("exponential arrays need g(0) = 1")
        if self.f.order < 2 or self.f.coeffs[0] or not self.f.coeffs[1]:
            raise NormalizationError("f needs f(0) = 0 and f'(0) != 0")

    def matrix(self, n: int) -> ExactMatrix:
        return exp_riordan_matrix(self, n)


def exp_riordan_matrix(p: ExpRiordanPair, n: int) -> ExactMatrix:
    _check_order(n, p.g, p.f)
    cols = _columns(p.g, p.f, n)
    return ExactMatrix(
        [cols[k][i] * factorial(i) / factorial(k) for k in range(n)] for i in range(n)
    )


@dataclass(frozen=True)
class AlmostRiordanPair:
    """``(a; g, f)``: column 0 is ``a``, column ``k >= 1`` is ``x g f^(k-1)``."""

    a: Series
    g: Series
    f: Series

    def __post_init__(self):
        if not self.a.coeffs[0]:
            raise NormalizationError("a must have nonzero constant term")
        if not self.g.coeffs[0]:
            raise NormalizationError("g must have nonzero constant term")
        if self.f.order < 2 or self.f.coeffs[0] or not self.f.coeffs[1]:
            raise NormalizationError("f needs f(0) = 0 and f'(0) != 0")

    def matrix(self, n: int) -> ExactMatrix:
        return almost_riordan_matrix(self, n)


def almost_riordan_matrix(p: AlmostRiordanPair, n: int) -> ExactMatrix:
    _check_order(n, p.a, p.g, p.f)
    cols = [p.a.truncate(n).coeffs]
    if n > 1:
        cols += _columns(p.g.truncate(n).shift_up(1), p.f, n)[: n - 1]
    return ExactMatrix.from_columns(cols, n)
