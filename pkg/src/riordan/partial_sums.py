"""Row and column partial sums of Riordan arrays and their inverses.

Column partial sums accumulate down each column (``Sigma @ M``) and stay
Riordan.  Row partial sums accumulate along each row (``M @ Sigma^T``);
their inverses are lower Hessenberg.
"""
from __future__ import annotations

from .arrays import RiordanPair, _check_order, riordan_inverse, riordan_matrix, riordan_multiply
from .errors import SingularMatrixError
from .matrix import ExactMatrix, sigma, sigma_inverse, sigma_transpose, shift_matrix
from .series import BivariateSeries, Series, ZERO


def col_partial_sum(p: RiordanPair) -> RiordanPair:
    """``(1/(1-x), x) . (g, f) = (g/(1-x), f)``."""
    return RiordanPair(p.g / (1 - Series.x(p.g.order)), p.f)


def col_ps_inverse(p: RiordanPair) -> RiordanPair:
    """``(1 - fbar, x) . (g, f)^-1``."""
    inv = riordan_inverse(p)
    n = inv.order
    left = RiordanPair(1 - inv.f, Series.x(n))
    return riordan_multiply(left, inv)


def row_partial_sum(p: RiordanPair, n: int) -> ExactMatrix:
    """Entry ``(n, k)`` is ``sum_{i<=k} [x^n] g f^i``; a full square, not a triangle."""
    m = riordan_matrix(p, n)
    out = []
    for r in m:
        acc, row = ZERO, []
        for c in r:
            acc += c
            row.append(acc)
        out.append(row)
    return ExactMatrix(out)


def row_ps_bivariate_gf(p: RiordanPair, order_x: int, order_y: int) -> BivariateSeries:
    """Grid of ``g / ((1-y)(1-y f))``."""
    _check_order(order_x, p.g, p.f)
    g = BivariateSeries.from_x_series(p.g.truncate(order_x), order_y)
    f = BivariateSeries.from_x_series(p.f.truncate(order_x), order_y)
    y = BivariateSeries.y(order_x, order_y)
    return g / ((1 - y) * (1 - y * f))


def auxiliary_pair(p: RiordanPair) -> RiordanPair:
    """``(-g/(1-f), f)``, whose inverse minus its top row is ``H``."""
    return RiordanPair(-p.g / (1 - p.f), p.f)


def row_ps_inverse_infinite(p: RiordanPair, n: int) -> ExactMatrix:
    """``n x n`` truncation of the inverse of the infinite row partial sum."""
    _check_order(n + 1, p.g, p.f)
    r = riordan_matrix(riordan_inverse(auxiliary_pair(p)), n + 1)
    return r.remove_top_row().submatrix(n, n)


def row_ps_inverse_product_form(p: RiordanPair, n: int) -> ExactMatrix:
    """The same matrix as ``U (1-x, x) (-g, f)^-1``, built from three factors."""
    _check_order(n + 1, p.g, p.f)
    neg = riordan_matrix(riordan_inverse(RiordanPair(-p.g, p.f)), n + 1)
    return (shift_matrix(n, n + 1) @ sigma_inverse(n + 1) @ neg).submatrix(n, n)


def row_ps_inverse_finite(p: RiordanPair, n: int) -> ExactMatrix:
    """Exact inverse of ``row_partial_sum(p, n)``.

    Agrees with the infinite form except in the last row, which is the last
    row of the ``n x n`` truncation of ``(g, f)^-1``.
    """
    last = riordan_matrix(riordan_inverse(p), n).row(n - 1)
    head = riordan_matrix(riordan_inverse(auxiliary_pair(p)), n).remove_top_row()
    h = ExactMatrix(list(head) + [last])
    if h @ row_partial_sum(p, n) != ExactMatrix.identity(n):
        raise SingularMatrixError("finite Hessenberg form does not invert the row partial sum")
    return h


def h_bivariate_gf(p: RiordanPair, order_x: int, order_y: int) -> BivariateSeries:
    """Grid of ``H`` from ``R(x, y) = ((1-x)/(-g(fbar))) / (1 - y fbar)``.

    ``H`` is ``R`` with its ``x^0`` row removed, i.e. ``(R - R(0, y)) / x``.
    """
    nx = order_x + 1
    _check_order(nx, p.g, p.f)
    fbar = p.f.truncate(nx).revert()
    col0 = (1 - Series.x(nx)) / (-p.g.truncate(nx).compose(fbar))
    y = BivariateSeries.y(nx, order_y)
    r = BivariateSeries.from_x_series(col0, order_y) / (
        1 - y * BivariateSeries.from_x_series(fbar, order_y)
    )
    top = BivariateSeries([r.grid[0]] + [[0] * order_y] * (nx - 1))
    return (r - top).shift_down_x(1)


def p_inverse_pair(p: RiordanPair) -> RiordanPair:
    """``(-(g f / x) / (1 - f), f)``, the block inverted inside ``H``."""
    gf_over_x = (p.g * p.f).shift_down(1)
    f = p.f.truncate(gf_over_x.order)
    return RiordanPair(-gf_over_x / (1 - f), f)


def canonical_rowps_decomposition(p: RiordanPair, n: int):
    """Split the row partial sum as ``block + x w^T``.

    Returns ``(block, x, w)``: the truncation of the block pair shifted down
    one row, the row-sum vector of ``(g, f)_n`` and the all-ones row.
    """
    _check_order(n, p.g, p.f)
    rows = [[ZERO] * n]
    if n > 1:
        inner = riordan_matrix(p_inverse_pair(p), n - 1)
        rows += [list(r) + [ZERO] for r in inner]
    block = ExactMatrix(rows)
    xs = list(riordan_matrix(p, n).row_sums())
    w = [1] * n
    return block, xs, w


def original_array_decomposition(p: RiordanPair, n: int):
    """``g/(1-yf) = (-g f/(1-f)) (1-y)/(1-y f) + g/(1-f)`` as two matrices."""
    _check_order(n, p.g, p.f)
    g, f = p.g.truncate(n), p.f.truncate(n)
    lead = -g * f / (1 - f)
    first_cols, power = [], Series.one(n)
    prev = None
    for _ in range(n):
        col = lead * power if prev is None else lead * (power - prev)
        first_cols.append(col.coeffs)
        prev, power = power, power * f
    first = ExactMatrix.from_columns(first_cols, n)
    sums = g / (1 - f)
    second = ExactMatrix([[sums.coeffs[i]] + [0] * (n - 1) for i in range(n)])
    return first, second


def commute_check(p: RiordanPair, n: int) -> bool:
    m = riordan_matrix(p, n)
    s, st = sigma(n), sigma_transpose(n)
    return s @ (m @ st) == (s @ m) @ st


def diag_sums_equal_check(p: RiordanPair, n: int) -> bool:
    m = riordan_matrix(p, n)
    return (sigma(n) @ m).diagonal_sums() == row_partial_sum(p, n).diagonal_sums()
