"""Inverse of a lower Hessenberg matrix as a shifted block plus a rank-one term.

Inside this module indices are 1-based (``h(i, j)`` for ``1 <= i, j <= n``)
so the recurrences read exactly as they are usually written.  Everything
crossing the module boundary is an :class:`ExactMatrix` or a 0-based list.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrays import RiordanPair, riordan_matrix
from .errors import HessenbergError, SingularMatrixError
from .matrix import ExactMatrix
from .partial_sums import p_inverse_pair, row_ps_inverse_finite
from .series import ONE, ZERO


@dataclass(frozen=True)
class HessenbergMatrix:
    matrix: ExactMatrix

    def __post_init__(self):
        m = self.matrix
        if not m.is_square():
            raise HessenbergError("Hessenberg matrices are square")
        if not m.is_lower_hessenberg():
            raise HessenbergError("nonzero entry above the superdiagonal")

    @property
    def n(self) -> int:
        return self.matrix.rows

    def h(self, i: int, j: int) -> Fraction:
        return self.matrix[i - 1, j - 1]

    @property
    def alphas(self) -> list:
        """Superdiagonal ``alpha_1 .. alpha_{n-1}``."""
        return [self.h(i, i + 1) for i in range(1, self.n)]


def _as_hessenberg(h) -> HessenbergMatrix:
    return h if isinstance(h, HessenbergMatrix) else HessenbergMatrix(h)


@dataclass(frozen=True)
class HessenbergPartition:
    """``H = [[C, P], [corner, R^T]]``."""

    C: list
    P: ExactMatrix
    corner: Fraction
    R: list

    def assemble(self) -> ExactMatrix:
        top = [[c] + list(prow) for c, prow in zip(self.C, self.P)]
        return ExactMatrix(top + [[self.corner] + list(self.R)])


@dataclass(frozen=True)
class HessenbergDecomposition:
    x: list
    w: list
    P_inv: ExactMatrix

    def assemble(self) -> ExactMatrix:
        n = len(self.x)
        out = [[self.x[i] * self.w[j] for j in range(n)] for i in range(n)]
        for i in range(1, n):
            for j in range(n - 1):
                out[i][j] += self.P_inv[i - 1, j]
        return ExactMatrix(out)


def partition(h) -> HessenbergPartition:
    H = _as_hessenberg(h)
    n = H.n
    if n < 2:
        raise HessenbergError("partition needs order at least 2")
    C = [H.h(i, 1) for i in range(1, n)]
    R = [H.h(n, j) for j in range(2, n + 1)]
    P = ExactMatrix([[H.h(i, j) for j in range(2, n + 1)] for i in range(1, n)])
    return HessenbergPartition(C=C, P=P, corner=H.h(n, 1), R=R)


def _require_alphas(H: HessenbergMatrix) -> None:
    for i, a in enumerate(H.alphas, start=1):
        if not a:
            raise HessenbergError(f"alpha_{i} is zero; the theorem does not apply")


def x_vector(h) -> list:
    """``x_1 = 1``, ``x_i = -(sum_{j<i} h(i-1, j) x_j) / alpha_{i-1}``."""
    H = _as_hessenberg(h)
    _require_alphas(H)
    x = [None, ONE]
    for i in range(2, H.n + 1):
        s = sum((H.h(i - 1, j) * x[j] for j in range(1, i)), ZERO)
        x.append(-s / H.h(i - 1, i))
    return x[1:]


def last_row_pairing(h) -> Fraction:
    """``sum_k h(n, k) x_k``; zero exactly when ``H`` is singular."""
    H = _as_hessenberg(h)
    x = x_vector(H)
    return sum((H.h(H.n, k) * x[k - 1] for k in range(1, H.n + 1)), ZERO)


def w_vector(h) -> list:
    """``w_n = 1 / sum_j h(n, j) x_j``, then ``w_i = -(sum_{j>i} h(j, i+1) w_j) / alpha_i``."""
    H = _as_hessenberg(h)
    n = H.n
    denom = last_row_pairing(H)
    if not denom:
        raise SingularMatrixError("Hessenberg matrix is singular", row=n - 1)
    w = [None] * (n + 1)
    w[n] = 1 / denom
    for i in range(n - 1, 0, -1):
        s = sum((H.h(j, i + 1) * w[j] for j in range(i + 1, n + 1)), ZERO)
        w[i] = -s / H.h(i, i + 1)
    return w[1:]


def decompose(h) -> HessenbergDecomposition:
    H = _as_hessenberg(h)
    x = x_vector(H)
    w = w_vector(H)
    if H.n == 1:
        p_inv = ExactMatrix.zeros(0, 0)
    else:
        p_inv = partition(H).P.inverse()
    return HessenbergDecomposition(x=x, w=w, P_inv=p_inv)


def zhong_inverse(h) -> ExactMatrix:
    """``H^-1 = [[0, 0], [P^-1, 0]] + x w^T``."""
    return decompose(h).assemble()


def det_relation_check(h) -> bool:
    """``sum_k h(n, k) x_k == (-1)^(n-1) det(H) / prod(alpha)``, det by elimination."""
    H = _as_hessenberg(h)
    _require_alphas(H)
    lhs = last_row_pairing(H)
    prod = ONE
    for a in H.alphas:
        prod *= a
    rhs = (-1) ** (H.n - 1) * H.matrix.determinant() / prod
    return lhs == rhs


def p_block_identity_check(p: RiordanPair, n: int) -> bool:
    """The ``P`` block of the finite ``H`` inverts the truncated block pair."""
    h = row_ps_inverse_finite(p, n)
    if n < 2:
        return True
    block = partition(h).P
    return block == riordan_matrix(p_inverse_pair(p), n - 1).inverse()
