"""Truncated formal power series with exact rational coefficients.

A :class:`Series` of order ``N`` carries the coefficients of ``x^0 .. x^(N-1)``.
Binary operations truncate to the smaller operand order, so the first ``N``
coefficients of any result depend only on the first ``N`` coefficients of
the inputs.  :class:`BivariateSeries` is the two-variable analogue on an
``order_x`` by ``order_y`` grid, and :class:`Polynomial` is an untruncated
polynomial used for the row polynomials of generated matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import (
    CompositionDomainError,
    ExpDomainError,
    LogDomainError,
    NonUnitError,
    OutOfRangeError,
    PowDomainError,
    ReversionDomainError,
    SeriesError,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def coef(value) -> Fraction:
    """Coerce ``value`` to an exact rational (ints, Fractions, "p/q" strings)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(value)


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Rational)) and not isinstance(value, bool)


@dataclass(frozen=True)
class Series:
    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        cs = tuple(coef(c) for c in coeffs)
        if not cs:
            raise SeriesError("a series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, value, order: int) -> Series:
        return cls([value] + [0] * (order - 1))

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([0] * order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.const(1, order)

    @classmethod
    def x(cls, order: int) -> Series:
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, degree: int, order: int, value=1) -> Series:
        cs = [0] * order
        if degree < order:
            cs[degree] = value
        return cls(cs)

    @classmethod
    def geometric(cls, ratio, order: int) -> Series:
        """Expansion of ``1/(1 - ratio*x)``."""
        r = coef(ratio)
        return cls([r**n for n in range(order)])

    # -- access -------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n < self.order:
            raise OutOfRangeError(f"coefficient index {n} outside 0..{self.order - 1}")
        return self.coeffs[n]

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.coeffs[n]
        return self.coeff(n)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return self.order

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Series([{body}])"

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[:order])

    def valuation(self):
        """Index of the first nonzero coefficient, or ``None`` for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def as_integers(self) -> list:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise SeriesError(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return out

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            return other
        if _is_scalar(other):
            return Series.const(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return Series(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    __radd__ = __add__

    def __neg__(self):
        return Series(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = coef(other)
            return Series(c * a for a in self.coeffs)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [ZERO] * n
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            for j in range(n - i):
                out[i + j] += ai * b[j]
        return Series(out)

    __rmul__ = __mul__

    def reciprocal(self) -> Series:
        c0 = self.coeffs[0]
        if not c0:
            raise NonUnitError("divisor has zero constant term")
        n = self.order
        inv0 = 1 / c0
        out = [inv0] + [ZERO] * (n - 1)
        a = self.coeffs
        for k in range(1, n):
            s = sum((a[i] * out[k - i] for i in range(1, k + 1)), ZERO)
            out[k] = -s * inv0
        return Series(out)

    def div(self, other, cancel: bool = False) -> Series:
        """Quotient ``self / other``.

        With ``cancel`` a common power ``x^v`` is divided out of both
        operands first; the result then loses ``v`` orders.
        """
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("unsupported divisor")
        if other.coeffs[0] or not cancel:
            if not other.coeffs[0]:
                raise NonUnitError("divisor has zero constant term")
            n = min(self.order, other.order)
            return self.truncate(n) * other.truncate(n).reciprocal()
        v = other.valuation()
        if v is None:
            raise NonUnitError("divisor is zero to truncation order")
        n = min(self.order, other.order)
        top = self.truncate(n)
        tv = top.valuation()
        if tv is not None and tv < v:
            raise NonUnitError(
                f"divisor vanishes to order {v} but dividend only to order {tv}"
            )
        return top.shift_down(v).div(other.truncate(n).shift_down(v))

    def __truediv__(self, other):
        if _is_scalar(other):
            c = coef(other)
            if not c:
                raise ZeroDivisionError("division of a series by zero")
            return Series(a / c for a in self.coeffs)
        if not isinstance(other, Series):
            return NotImplemented
        return self.div(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other.div(self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        result = Series.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_down(self, k: int) -> Series:
        """Divide by ``x^k``; the low ``k`` coefficients must vanish."""
        if k == 0:
            return self
        if any(self.coeffs[:k]):
            raise NonUnitError(f"series is not divisible by x^{k}")
        if k >= self.order:
            raise SeriesError("shift leaves no coefficients")
        return Series(self.coeffs[k:])

    def shift_up(self, k: int) -> Series:
        """Multiply by ``x^k`` keeping the same order."""
        return Series(([ZERO] * k + list(self.coeffs))[: self.order])

    def derivative(self) -> Series:
        if self.order == 1:
            return Series([0])
        return Series(i * self.coeffs[i] for i in range(1, self.order))

    def integral(self, constant=0) -> Series:
        """Antiderivative; the result is one order longer."""
        return Series([constant] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    # -- composition and transcendental operations ---------------------------

    def compose(self, inner: Series) -> Series:
        """``self(inner(x))`` by Horner's rule."""
        if inner.coeffs[0]:
            raise CompositionDomainError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = Series.const(self.coeffs[n - 1], n)
        for k in range(n - 2, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def __call__(self, inner: Series) -> Series:
        return self.compose(inner)

    def revert(self) -> Series:
        """Compositional inverse by Lagrange inversion.

        ``[x^n] u = (1/n) [t^(n-1)] (t/f(t))^n``.
        """
        if self.order < 2:
            raise ReversionDomainError("need at least two coefficients to revert")
        if self.coeffs[0] or not self.coeffs[1]:
            raise ReversionDomainError("reversion needs f(0) = 0 and f'(0) != 0")
        n = self.order
        phi = self.shift_down(1).reciprocal()
        out = [ZERO] * n
        power = Series.one(n - 1)
        for k in range(1, n):
            power = power * phi
            out[k] = power.coeffs[k - 1] / k
        return Series(out)

    def log1(self) -> Series:
        """Formal logarithm of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise LogDomainError("log needs constant term 1")
        if self.order == 1:
            return Series([0])
        q = self.derivative().div(self.truncate(self.order - 1))
        return q.integral(0)

    def exp0(self) -> Series:
        """Formal exponential of a series with zero constant term."""
        if self.coeffs[0]:
            raise ExpDomainError("exp needs zero constant term")
        n = self.order
        u = self.coeffs
        out = [ONE] + [ZERO] * (n - 1)
        for m in range(1, n):
            s = sum((k * u[k] * out[m - k] for k in range(1, m + 1)), ZERO)
            out[m] = s / m
        return Series(out)

    def pow_rational(self, p: int, q: int = 1) -> Series:
        """``self^(p/q)`` as ``exp((p/q) log(self))``."""
        if q <= 0:
            raise PowDomainError("exponent denominator must be positive")
        if self.coeffs[0] != 1:
            raise PowDomainError("rational power needs constant term 1")
        return (self.log1() * Fraction(p, q)).exp0()


def log1(u: Series) -> Series:
    return u.log1()


def exp0(u: Series) -> Series:
    return u.exp0()


def pow_rational(u: Series, p: int, q: int = 1) -> Series:
    return u.pow_rational(p, q)


def compose(outer: Series, inner: Series) -> Series:
    return outer.compose(inner)


def revert(f: Series) -> Series:
    return f.revert()


# -- univariate helper series used as outer functions on the bivariate grid --


def _log1p_series(order: int) -> Series:
    return Series([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, order)])


def _exp_series(order: int) -> Series:
    out, fact = [], 1
    for k in range(order):
        if k:
            fact *= k
        out.append(Fraction(1, fact))
    return Series(out)


def _binomial_series(alpha: Fraction, order: int) -> Series:
    out, c = [], ONE
    for k in range(order):
        out.append(c)
        c = c * (alpha - k) / (k + 1)
    return Series(out)


@dataclass(frozen=True)
class BivariateSeries:
    """Truncated double series; ``grid[n][k]`` is the coefficient of ``x^n y^k``."""

    grid: tuple

    def __init__(self, grid: Iterable[Iterable]):
        rows = tuple(tuple(coef(c) for c in row) for row in grid)
        if not rows or not rows[0]:
            raise SeriesError("bivariate series needs a nonempty grid")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise SeriesError("ragged bivariate grid")
        object.__setattr__(self, "grid", rows)

    @classmethod
    def zero(cls, order_x: int, order_y: int) -> BivariateSeries:
        return cls([[0] * order_y for _ in range(order_x)])

    @classmethod
    def const(cls, value, order_x: int, order_y: int) -> BivariateSeries:
        g = [[0] * order_y for _ in range(order_x)]
        g[0][0] = value
        return cls(g)

    @classmethod
    def x(cls, order_x: int, order_y: int) -> BivariateSeries:
        g = [[0] * order_y for _ in range(order_x)]
        if order_x > 1:
            g[1][0] = 1
        return cls(g)

    @classmethod
    def y(cls, order_x: int, order_y: int) -> BivariateSeries:
        g = [[0] * order_y for _ in range(order_x)]
        if order_y > 1:
            g[0][1] = 1
        return cls(g)

    @classmethod
    def from_x_series(cls, s: Series, order_y: int) -> BivariateSeries:
        return cls([[c] + [0] * (order_y - 1) for c in s.coeffs])

    @property
    def order_x(self) -> int:
        return len(self.grid)

    @property
    def order_y(self) -> int:
        return len(self.grid[0])

    def coeff(self, n: int, k: int) -> Fraction:
        if not (0 <= n < self.order_x and 0 <= k < self.order_y):
            raise OutOfRangeError(f"index ({n}, {k}) outside the grid")
        return self.grid[n][k]

    def truncate(self, order_x: int, order_y: int) -> BivariateSeries:
        if order_x > self.order_x or order_y > self.order_y:
            raise SeriesError("cannot extend a bivariate series")
        return BivariateSeries(row[:order_y] for row in self.grid[:order_x])

    def y_coefficient(self, k: int) -> Series:
        """The series in ``x`` multiplying ``y^k``."""
        return Series(row[k] for row in self.grid)

    def as_integers(self) -> list:
        out = []
        for row in self.grid:
            r = []
            for c in row:
                if c.denominator != 1:
                    raise SeriesError(f"coefficient {c} is not an integer")
                r.append(c.numerator)
            out.append(r)
        return out

    def _coerce(self, other):
        if isinstance(other, BivariateSeries):
            return other
        if isinstance(other, Series):
            return BivariateSeries.from_x_series(other, self.order_y)
        if _is_scalar(other):
            return BivariateSeries.const(other, self.order_x, self.order_y)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        nx = min(self.order_x, other.order_x)
        ny = min(self.order_y, other.order_y)
        return BivariateSeries(
            [self.grid[i][j] + other.grid[i][j] for j in range(ny)] for i in range(nx)
        )

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries([-c for c in row] for row in self.grid)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = coef(other)
            return BivariateSeries([c * a for a in row] for row in self.grid)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        nx = min(self.order_x, other.order_x)
        ny = min(self.order_y, other.order_y)
        out = [[ZERO] * ny for _ in range(nx)]
        a, b = self.grid, other.grid
        for i in range(nx):
            for j in range(ny):
                aij = a[i][j]
                if not aij:
                    continue
                for p in range(nx - i):
                    brow, orow = b[p], out[i + p]
                    for q in range(ny - j):
                        orow[j + q] += aij * brow[q]
        return BivariateSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        result = BivariateSeries.const(1, self.order_x, self.order_y)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self) -> BivariateSeries:
        b = self.grid
        b00 = b[0][0]
        if not b00:
            raise NonUnitError("divisor has zero constant term")
        nx, ny = self.order_x, self.order_y
        w = [[ZERO] * ny for _ in range(nx)]
        for n in range(nx):
            for k in range(ny):
                s = ONE if (n, k) == (0, 0) else ZERO
                for i in range(n + 1):
                    for j in range(k + 1):
                        if (i or j) and b[i][j]:
                            s -= b[i][j] * w[n - i][k - j]
                w[n][k] = s / b00
        return BivariateSeries(w)

    def x_valuation(self):
        for i, row in enumerate(self.grid):
            if any(row):
                return i
        return None

    def shift_down_x(self, k: int) -> BivariateSeries:
        if k == 0:
            return self
        if any(any(row) for row in self.grid[:k]):
            raise NonUnitError(f"bivariate series is not divisible by x^{k}")
        if k >= self.order_x:
            raise SeriesError("shift leaves no coefficients")
        return BivariateSeries(self.grid[k:])

    def div(self, other, cancel: bool = False) -> BivariateSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("unsupported divisor")
        nx = min(self.order_x, other.order_x)
        ny = min(self.order_y, other.order_y)
        top, bottom = self.truncate(nx, ny), other.truncate(nx, ny)
        if bottom.grid[0][0] or not cancel:
            return top * bottom.reciprocal()
        v = bottom.x_valuation()
        if v is None:
            raise NonUnitError("divisor is zero to truncation order")
        tv = top.x_valuation()
        if tv is not None and tv < v:
            raise NonUnitError(
                f"divisor vanishes to order {v} in x but dividend only to order {tv}"
            )
        return top.shift_down_x(v).div(bottom.shift_down_x(v))

    def __truediv__(self, other):
        if _is_scalar(other):
            c = coef(other)
            return BivariateSeries([a / c for a in row] for row in self.grid)
        return self.div(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other.div(self)

    def compose_into(self, outer: Series) -> BivariateSeries:
        """``outer(self)`` for a grid with zero constant term."""
        if self.grid[0][0]:
            raise CompositionDomainError("inner series must have zero constant term")
        # powers of the inner grid vanish beyond total degree order_x + order_y - 2
        depth = min(outer.order, self.order_x + self.order_y - 1)
        result = BivariateSeries.const(outer.coeffs[depth - 1], self.order_x, self.order_y)
        for k in range(depth - 2, -1, -1):
            result = result * self + outer.coeffs[k]
        return result

    def _nilpotent_part(self, error, what):
        if self.grid[0][0] != 1:
            raise error(f"{what} needs constant term 1")
        return self - 1

    def log1(self) -> BivariateSeries:
        t = self._nilpotent_part(LogDomainError, "log")
        return t.compose_into(_log1p_series(self.order_x + self.order_y))

    def exp0(self) -> BivariateSeries:
        if self.grid[0][0]:
            raise ExpDomainError("exp needs zero constant term")
        return self.compose_into(_exp_series(self.order_x + self.order_y))

    def pow_rational(self, p: int, q: int = 1) -> BivariateSeries:
        if q <= 0:
            raise PowDomainError("exponent denominator must be positive")
        t = self._nilpotent_part(PowDomainError, "rational power")
        return t.compose_into(_binomial_series(Fraction(p, q), self.order_x + self.order_y))


@dataclass(frozen=True)
class Polynomial:
    """Exact univariate polynomial; ``coeffs[k]`` multiplies ``x^k``.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        cs = [coef(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, value):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if _is_scalar(other):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ZERO] * (n - len(self.coeffs))
        b = list(other.coeffs) + [ZERO] * (n - len(other.coeffs))
        return Polynomial(p + q for p, q in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def to_series(self, order: int) -> Series:
        if self.degree >= order:
            raise SeriesError(f"degree {self.degree} does not fit in order {order}")
        return Series(list(self.coeffs) + [0] * (order - len(self.coeffs)))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def pochhammer_rising(base: Polynomial, i: int) -> Polynomial:
    """``base (base+1) ... (base+i-1)``; the empty product is 1."""
    if i < 0:
        raise ValueError("count must be nonnegative")
    result = Polynomial([1])
    for j in range(i):
        result = result * (base + j)
    return result


def coefficients(values: Sequence) -> list:
    return [coef(v) for v in values]
