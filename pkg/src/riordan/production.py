"""Production (Stieltjes) matrices and the identities built on them."""
from __future__ import annotations

from .arrays import (
    ExpRiordanPair,
    RiordanPair,
    exp_riordan_matrix,
    riordan_inverse,
    riordan_matrix,
)
from .errors import ShapeError
from .matrix import ExactMatrix, sigma_inverse, sigma_transpose_inverse
from .partial_sums import row_ps_inverse_finite, row_ps_inverse_infinite
from .series import ONE, ZERO, Series


def production_matrix(m: ExactMatrix) -> ExactMatrix:
    """``M^-1 . (M without its top row)``, ``N x N`` from an ``(N+1) x (N+1)`` input.

    For lower-triangular ``M`` the leading block of the inverse is the
    inverse of the leading block, so the result is exact.
    """
    if not m.is_square() or m.rows < 2:
        raise ShapeError("production matrix needs a square input of order at least 2")
    if not m.is_lower_triangular():
        raise ShapeError("production matrix needs a lower-triangular input")
    n = m.rows - 1
    return m.leading(n).inverse() @ m.submatrix(n, n, row0=1)


def generate_from_production(p: ExactMatrix, n: int) -> ExactMatrix:
    """Rows ``r_0 = e_0`` and ``r_{k+1} = r_k . P``."""
    if p.rows < n - 1 or p.cols < n:
        raise ShapeError(f"a {p.rows}x{p.cols} production matrix cannot generate {n} rows")
    row = [ONE] + [ZERO] * (n - 1)
    out = [row]
    for k in range(n - 1):
        row = [sum((row[j] * p[j, c] for j in range(k + 1) if row[j]), ZERO) for c in range(n)]
        out.append(row)
    return ExactMatrix(out)


def a_sequence(p: RiordanPair, n: int) -> Series:
    """``x / fbar``: column 1 of the production matrix of ``(g, f)``."""
    fbar = p.f.truncate(n + 1).revert()
    return Series.x(n + 1).div(fbar, cancel=True)


def z_sequence(p: RiordanPair, n: int) -> Series:
    """Column 0 of the production matrix of ``(g, f)``: ``(1 - 1/g(fbar)) / fbar``."""
    fbar = p.f.truncate(n + 1).revert()
    num = 1 - p.g.truncate(n + 1).compose(fbar).reciprocal()
    return num.div(fbar, cancel=True)


def a_sequence_of_inverse(p: RiordanPair, n: int) -> Series:
    """``x / f``: column 1 of the production matrix of ``(g, f)^-1``."""
    return Series.x(n + 1).div(p.f.truncate(n + 1), cancel=True)


def z_sequence_of_inverse(p: RiordanPair, n: int) -> Series:
    """Column 0 of the production matrix of ``(g, f)^-1``: ``(1 - g) / f``."""
    return (1 - p.g.truncate(n + 1)).div(p.f.truncate(n + 1), cancel=True)


def is_riordan_production(p: ExactMatrix) -> bool:
    """Columns from the second one on are down-shifts of one column with nonzero head."""
    if not p.is_square() or not p.is_lower_hessenberg() or p.cols < 2:
        return False
    if not p[0, 1]:
        return False
    n = p.rows
    for k in range(2, n):
        for i in range(n):
            above = p[i - 1, k - 1] if i >= 1 else ZERO
            if p[i, k] != above:
                return False
    return True


def fourfold_product(p: RiordanPair, n: int) -> ExactMatrix:
    """``M (Sigma M Sigma^T)^-1 = M (Sigma^T)^-1 M^-1 Sigma^-1`` at ``n x n``.

    Built at order ``n+1``; only the last row and column of that product
    feel the truncation, so the leading ``n x n`` block is exact.
    """
    m = riordan_matrix(p, n + 1)
    full = m @ sigma_transpose_inverse(n + 1) @ m.inverse() @ sigma_inverse(n + 1)
    return full.leading(n)


def fourfold_via_production(p: RiordanPair, n: int) -> ExactMatrix:
    """``Sigma^-1 - P_{M^-1} Sigma^-1`` with ``P_{M^-1}`` from an independent build."""
    pm = production_matrix(riordan_matrix(riordan_inverse(p), n + 2))
    s = sigma_inverse(n + 1)
    return (s - pm @ s).leading(n)


def fourfold_target_pair(p: RiordanPair, sign: int = 1) -> RiordanPair:
    """``(g/((1-x)(1-f)), sign * f/((1-x)(1-f)))``."""
    x = Series.x(p.order)
    d = (1 - x) * (1 - p.f)
    return RiordanPair(p.g / d, p.f / d * sign)


def fourfold_target_production(p: RiordanPair, n: int, sign: int = 1) -> ExactMatrix:
    """Production matrix of the inverse of :func:`fourfold_target_pair`."""
    q = fourfold_target_pair(p, sign)
    return production_matrix(riordan_matrix(riordan_inverse(q), n + 1))


def a_seq_of_fourfold_target(p: RiordanPair, n: int) -> Series:
    """``x / F`` with ``F = f/((1-x)(1-f))``: the A-sequence of the target's inverse."""
    q = fourfold_target_pair(p)
    return Series.x(n + 1).div(q.f.truncate(n + 1), cancel=True).truncate(n)


def fourfold_readoff(pm: ExactMatrix, n: int) -> ExactMatrix:
    """The four-fold product predicted entrywise from ``P_{M^-1}``.

    With ``z`` the first column of ``P_{M^-1}`` and ``a`` its shared column
    sequence, entry ``(i, 0)`` is ``[i=0] - [i=1] - z_i + a_i`` and entry
    ``(i, k >= 1)`` is ``Sigma^-1[i, k] - a_{i-k+1} + a_{i-k}``.
    """
    z = [pm[i, 0] for i in range(n)]
    a = [pm[i, 1] for i in range(n)]

    def a_at(j):
        return a[j] if 0 <= j < n else ZERO

    def s_inv(i, k):
        return ONE if i == k else (-ONE if i == k + 1 else ZERO)

    rows = []
    for i in range(n):
        row = [s_inv(i, 0) - z[i] + a[i]]
        for k in range(1, n):
            row.append(s_inv(i, k) - a_at(i - k + 1) + a_at(i - k))
        rows.append(row)
    return ExactMatrix(rows)


def stirling_pair(r: int, order: int) -> ExpRiordanPair:
    """``[(1 - r x)^(-(r+1)/r), (1/r) ln(1 - r x)]``."""
    u = 1 - Series.x(order) * r
    return ExpRiordanPair(u.pow_rational(-(r + 1), r), u.log1() / r)


def scaled_pascal(r: int, order: int) -> RiordanPair:
    """``(1/(1 - r x), x/(1 - r x))`` with entries ``C(n, k) r^(n-k)``."""
    g = Series.geometric(r, order)
    return RiordanPair(g, g.shift_up(1))


def stirling_production_check(r: int, n: int) -> bool:
    """Inverse row partial sum of the scaled Pascal array is the production matrix.

    The inverse is that of the infinite array (``n x n`` truncation); the
    finite ``H`` is compared on its first ``n-1`` rows, and must generate the
    same leading ``n x n`` array.
    """
    order = n + 2
    exp_m = exp_riordan_matrix(stirling_pair(r, order), n + 1)
    prod = production_matrix(exp_m)
    pair = scaled_pascal(r, order)
    h_inf = row_ps_inverse_infinite(pair, n)
    h_fin = row_ps_inverse_finite(pair, n)
    return (
        h_inf == prod
        and h_fin.submatrix(n - 1, n) == prod.submatrix(n - 1, n)
        and generate_from_production(h_fin, n) == exp_m.leading(n)
    )


def _charpoly_signed(h: ExactMatrix) -> list:
    """Coefficients of ``det(H - t I)`` (lowest degree first).

    Exact interpolation through ``n+1`` integer nodes.
    """
    n = h.rows
    if n == 0:
        return [ONE]
    nodes = list(range(n + 1))
    values = []
    for t in nodes:
        shifted = ExactMatrix(
            [[h[i, j] - (t if i == j else 0) for j in range(n)] for i in range(n)]
        )
        values.append(shifted.determinant())
    coeffs = [ZERO] * (n + 1)
    for i, ti in enumerate(nodes):
        basis = [ONE]
        denom = ONE
        for j, tj in enumerate(nodes):
            if j == i:
                continue
            basis = [ZERO] + basis
            for k in range(len(basis) - 1):
                basis[k] -= tj * basis[k + 1]
            denom *= ti - tj
        scale = values[i] / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    return coeffs


def characteristic_rows(n: int) -> ExactMatrix:
    """Row ``k`` holds the coefficients of ``det(H_k - t I)`` for the principal minors of Pascal's ``H``."""
    h = row_ps_inverse_infinite(RiordanPair.pascal(n + 2), n)
    rows = []
    for k in range(n):
        c = _charpoly_signed(h.leading(k)) if k else [ONE]
        rows.append(c + [ZERO] * (n - len(c)))
    return ExactMatrix(rows)


def two_stirling_pair(order: int) -> ExpRiordanPair:
    """``[e^(2x), 1 - e^x]``."""
    x = Series.x(order)
    return ExpRiordanPair((x * 2).exp0(), 1 - x.exp0())


def charpoly_rows_check(n: int) -> bool:
    """Rows ``0..n`` of ``[e^(2x), 1 - e^x]`` are the signed characteristic polynomials."""
    size = n + 1
    expected = exp_riordan_matrix(two_stirling_pair(size + 1), size)
    return characteristic_rows(size) == expected


__all__ = [
    "production_matrix",
    "generate_from_production",
    "a_sequence",
    "z_sequence",
    "a_sequence_of_inverse",
    "z_sequence_of_inverse",
    "is_riordan_production",
    "fourfold_product",
    "fourfold_via_production",
    "fourfold_target_pair",
    "fourfold_target_production",
    "a_seq_of_fourfold_target",
    "fourfold_readoff",
    "stirling_pair",
    "scaled_pascal",
    "stirling_production_check",
    "characteristic_rows",
    "two_stirling_pair",
    "charpoly_rows_check",
]
