"""The first-row collection built from ``B . Sigma~`` and the identities around it.

``Sigma~`` is the identity with an all-ones first row.  Collecting the first
row of the inverse of every leading principal submatrix of ``B . Sigma~``
(``B`` the binomial matrix) gives a lower-triangular matrix ``A`` that is an
almost-Riordan array whose square is Riordan.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .arrays import AlmostRiordanPair, RiordanPair, almost_riordan_matrix, riordan_matrix
from .errors import SingularMatrixError
from .matrix import ExactMatrix, binomial_matrix, sigma_tilde
from .production import generate_from_production, production_matrix
from .series import Polynomial, Series, ZERO, pochhammer_rising


def collect_first_rows(m: ExactMatrix, n: int) -> ExactMatrix:
    """Row ``k-1`` is the first row of ``(M_k)^-1``, zero-padded to width ``n``."""
    rows = []
    for k in range(1, n + 1):
        try:
            inv = m.leading(k).inverse()
        except SingularMatrixError as exc:
            raise SingularMatrixError(f"principal submatrix of order {k} is singular", row=exc.row) from exc
        rows.append(list(inv.row(0)) + [ZERO] * (n - k))
    return ExactMatrix(rows)


def binomial_sigma_tilde(n: int) -> ExactMatrix:
    return binomial_matrix(n) @ sigma_tilde(n)


def principal_inverses(n: int) -> list:
    m = binomial_sigma_tilde(n)
    return [m.leading(k).inverse() for k in range(1, n + 1)]


def build_A(n: int) -> ExactMatrix:
    return collect_first_rows(binomial_sigma_tilde(n), n)


def _x(order):
    return Series.x(order)


def a_pair(order: int) -> AlmostRiordanPair:
    """``((1+2x)/(1-x^2); 1/((x-1)(1+x)^2), x/(1+x))``."""
    x = _x(order)
    return AlmostRiordanPair((1 + 2 * x) / (1 - x * x), 1 / ((x - 1) * (1 + x) ** 2), x / (1 + x))


def c_pair(order: int) -> AlmostRiordanPair:
    """``((1+x)/(1-x); -1, x)``, an involution."""
    x = _x(order)
    return AlmostRiordanPair((1 + x) / (1 - x), Series.const(-1, order), x)


def b_pair(order: int) -> RiordanPair:
    """``(1/(1-x^2), x/(1+x))`` with ``A = B . C``."""
    x = _x(order)
    return RiordanPair(1 / (1 - x * x), x / (1 + x))


def a_squared_pair(order: int) -> RiordanPair:
    """``((1+x)/((1-x)(1+2x)), x/(1+2x))``."""
    x = _x(order)
    return RiordanPair((1 + x) / ((1 - x) * (1 + 2 * x)), x / (1 + 2 * x))


def a_squared_displayed_pair(order: int) -> RiordanPair:
    """The variant with ``(1-2x)`` in the denominator, as displayed before the proposition."""
    x = _x(order)
    return RiordanPair((1 + x) / ((1 - x) * (1 - 2 * x)), x / (1 + 2 * x))


def factor_matrices(n: int) -> dict:
    """The factors of the four product representations of ``A`` and ``A^-1``."""
    order = n
    x = _x(order)
    one = Series.one(order)
    return {
        # almost-Riordan times Riordan
        "almost_left": almost_riordan_matrix(
            AlmostRiordanPair((1 + 2 * x) / (1 - x * x), -1 / (1 - x * x), x), n
        ),
        "riordan_right": almost_riordan_matrix(AlmostRiordanPair(one, 1 / (1 + x), x / (1 + x)), n),
        # signed lower matrix times inverse binomial
        "signed_ones": almost_riordan_matrix(AlmostRiordanPair(1 / (1 - x), -1 / (1 - x), x), n),
        "inverse_binomial": riordan_matrix(RiordanPair(1 / (1 + x), x / (1 + x)), n),
        # binomial . middle . inverse binomial
        "binomial": binomial_matrix(n),
        "middle": almost_riordan_matrix(AlmostRiordanPair(one, -1 / (1 + x), x / (1 + x)), n),
        # A^-1 = binomial . difference
        "difference": almost_riordan_matrix(AlmostRiordanPair(1 + x, x - 1, x), n),
    }


@dataclass
class CheckReport:
    name: str
    results: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())


def factorization_checks(n: int) -> CheckReport:
    a = build_A(n)
    f = factor_matrices(n)
    rep = CheckReport("factorizations")
    rep.results["almost_times_riordan"] = f["almost_left"] @ f["riordan_right"] == a
    rep.results["signed_ones_times_inverse_binomial"] = f["signed_ones"] @ f["inverse_binomial"] == a
    rep.results["triple_product"] = f["binomial"] @ f["middle"] @ f["inverse_binomial"] == a
    rep.results["inverse_factorization"] = f["binomial"] @ f["difference"] == a.inverse()
    rep.results["closed_form"] = almost_riordan_matrix(a_pair(n), n) == a
    rep.results["b_times_c"] = (
        riordan_matrix(b_pair(n), n) @ almost_riordan_matrix(c_pair(n), n) == a
    )
    return rep


def a_squared_check(n: int) -> bool:
    """``A^2`` equals the Riordan array and ``B^-1 (1/(1-2x), x) B^-1``."""
    a = build_A(n)
    sq = a @ a
    x = _x(n)
    b_inv = binomial_matrix(n).inverse()
    sandwich = b_inv @ riordan_matrix(RiordanPair(1 / (1 - 2 * x), x), n) @ b_inv
    return sq == riordan_matrix(a_squared_pair(n), n) and sq == sandwich


def a_squared_displayed_check(n: int) -> bool:
    """Whether ``A^2`` matches the ``(1-2x)``-denominator display."""
    a = build_A(n)
    return a @ a == riordan_matrix(a_squared_displayed_pair(n), n)


def c_involution_check(n: int) -> bool:
    c = almost_riordan_matrix(c_pair(n), n)
    return c @ c == ExactMatrix.identity(n)


def fibonacci(count: int) -> list:
    """``F_0 .. F_{count-1}`` with ``F_0 = 0``."""
    out, a, b = [], 0, 1
    for _ in range(count):
        out.append(a)
        a, b = b, a + b
    return out


def signed_fibonacci(count: int) -> list:
    """``1, 1, -2, 3, -5, 8, ...``: ``s_0 = 1`` and ``s_n = (-1)^(n+1) F_(n+1)``."""
    fib = fibonacci(count + 1)
    return [1] + [(-1) ** (n + 1) * fib[n + 1] for n in range(1, count)]


def diagonal_sum_identities(n: int) -> CheckReport:
    a = build_A(n)
    d = a.diagonal_sums()
    x = _x(n)
    gf = (1 + 2 * x - 2 * x * x) / (1 - 2 * x * x + x * x * x)
    partial, acc = [], 0
    for s in signed_fibonacci(n):
        acc += s
        partial.append(acc)
    rep = CheckReport("diagonal sums")
    rep.results["generating_function"] = list(gf.coeffs) == d
    rep.results["signed_fibonacci_partial_sums"] = partial == d
    rep.results["inverse_is_fibonacci_plus_one"] = a.inverse().diagonal_sums() == [
        f + 1 for f in fibonacci(n)
    ]
    return rep


def generated_from_A(n: int) -> ExactMatrix:
    """The matrix generated by ``A`` without its top row, used as a production matrix."""
    return generate_from_production(build_A(n + 1).remove_top_row(), n)


def row_polynomials(m: ExactMatrix) -> list:
    return [Polynomial(m.row(i)) for i in range(m.rows)]


def conjectured_polynomial(n: int) -> Polynomial:
    """``1 + (1-x) sum_{i<n} (1-x)_i`` with the rising factorial."""
    base = 1 - Polynomial.x()
    total = Polynomial()
    for i in range(n):
        total = total + pochhammer_rising(base, i)
    return 1 + base * total


@dataclass
class ConjectureReport:
    checked_to: int
    first_mismatch: int | None

    @property
    def verified(self) -> bool:
        return self.first_mismatch is None

    def describe(self) -> str:
        if self.verified:
            return f"conjecture verified to n={self.checked_to} (not a proof)"
        return f"conjecture fails at n={self.first_mismatch}"


def conjecture_check(n: int) -> ConjectureReport:
    polys = row_polynomials(generated_from_A(n))
    for k, p in enumerate(polys):
        if p != conjectured_polynomial(k):
            return ConjectureReport(checked_to=k - 1, first_mismatch=k)
    return ConjectureReport(checked_to=n - 1, first_mismatch=None)


def final_production_array(n: int) -> ExactMatrix:
    """Production matrix of the inverse of the row-polynomial coefficient array."""
    coeffs = generated_from_A(n + 1)
    return production_matrix(coeffs.inverse())
