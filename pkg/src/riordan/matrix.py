"""Dense matrices over the rationals with exact elimination."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError, SingularMatrixError
from .series import ZERO, ONE, coef


@dataclass(frozen=True)
class ExactMatrix:
    rows_: tuple

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(coef(c) for c in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ShapeError("ragged matrix rows")
        object.__setattr__(self, "rows_", data)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> ExactMatrix:
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> ExactMatrix:
        return cls([[col[i] for col in columns] for i in range(rows)])

    @classmethod
    def lower(cls, rows: Sequence[Sequence]) -> ExactMatrix:
        """Square matrix from ragged rows, zero-padded on the right.

        Convenient for transcribing lower-triangular displays.
        """
        n = max(len(rows), max((len(r) for r in rows), default=0))
        return cls([list(r) + [0] * (n - len(r)) for r in rows])

    # -- shape and access ---------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.rows_)

    @property
    def cols(self) -> int:
        return len(self.rows_[0]) if self.rows_ else 0

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self.rows_[i][j]

    def row(self, i: int) -> tuple:
        return self.rows_[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows_)

    def __iter__(self):
        return iter(self.rows_)

    def tolist(self) -> list:
        return [list(r) for r in self.rows_]

    def as_integers(self) -> list:
        out = []
        for r in self.rows_:
            row = []
            for c in r:
                if c.denominator != 1:
                    raise ValueError(f"entry {c} is not an integer")
                row.append(c.numerator)
            out.append(row)
        return out

    def submatrix(self, rows: int, cols: int | None = None, row0: int = 0, col0: int = 0) -> ExactMatrix:
        cols = rows if cols is None else cols
        if row0 + rows > self.rows or col0 + cols > self.cols:
            raise ShapeError(
                f"block {rows}x{cols} at ({row0}, {col0}) exceeds {self.rows}x{self.cols}"
            )
        return ExactMatrix(r[col0:col0 + cols] for r in self.rows_[row0:row0 + rows])

    def leading(self, n: int) -> ExactMatrix:
        """Leading principal ``n x n`` submatrix."""
        return self.submatrix(n, n)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(c) for c in r) + "]" for r in self.rows_)
        return f"ExactMatrix([{body}])"

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return ExactMatrix(
            [a + b for a, b in zip(r, s)] for r, s in zip(self.rows_, other.rows_)
        )

    def __neg__(self):
        return ExactMatrix([-c for c in r] for r in self.rows_)

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> ExactMatrix:
        c = coef(c)
        return ExactMatrix([c * a for a in r] for r in self.rows_)

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows_)) if other.rows_ else []
        out = []
        for r in self.rows_:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * col[k] for k, a in nz), ZERO) for col in cols])
        return ExactMatrix(out) if out else ExactMatrix.zeros(0, other.cols)

    def apply(self, vector: Sequence) -> list:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise ShapeError("vector length does not match column count")
        v = [coef(c) for c in vector]
        return [sum((a * b for a, b in zip(r, v)), ZERO) for r in self.rows_]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(zip(*self.rows_))

    @property
    def T(self) -> ExactMatrix:
        return self.transpose()

    def inverse(self) -> ExactMatrix:
        """Gauss-Jordan inverse; lower-triangular input is solved by substitution."""
        if not self.is_square():
            raise ShapeError("only square matrices can be inverted")
        n = self.rows
        if self.is_lower_triangular():
            return self._lower_inverse()
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows_)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise SingularMatrixError(f"matrix is singular: no pivot in row {col}", row=col)
            aug[col], aug[pivot] = aug[pivot], aug[col]
            p = aug[col][col]
            prow = [c / p for c in aug[col]]
            aug[col] = prow
            for r in range(n):
                if r != col and aug[r][col]:
                    factor = aug[r][col]
                    aug[r] = [a - factor * b for a, b in zip(aug[r], prow)]
        return ExactMatrix(r[n:] for r in aug)

    def _lower_inverse(self) -> ExactMatrix:
        n = self.rows
        a = self.rows_
        inv = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            if not a[i][i]:
                raise SingularMatrixError(f"matrix is singular: zero pivot in row {i}", row=i)
        for j in range(n):
            inv[j][j] = 1 / a[j][j]
            for i in range(j + 1, n):
                s = sum((a[i][k] * inv[k][j] for k in range(j, i)), ZERO)
                inv[i][j] = -s / a[i][i]
        return ExactMatrix(inv)

    def determinant(self) -> Fraction:
        if not self.is_square():
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        m = [list(r) for r in self.rows_]
        det = ONE
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col]), None)
            if pivot is None:
                return ZERO
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            p = m[col][col]
            det *= p
            for r in range(col + 1, n):
                if m[r][col]:
                    factor = m[r][col] / p
                    m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
        return det

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactMatrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    # -- structure ----------------------------------------------------------

    def is_lower_triangular(self) -> bool:
        return all(not self.rows_[i][j] for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_lower_hessenberg(self) -> bool:
        return all(not self.rows_[i][j] for i in range(self.rows) for j in range(i + 2, self.cols))

    def remove_top_row(self, next_row: Sequence | None = None) -> ExactMatrix:
        """Drop row 0; optionally append ``next_row`` to keep the row count."""
        if self.rows == 0:
            raise ShapeError("no row to remove")
        body = list(self.rows_[1:])
        if next_row is not None:
            if len(next_row) != self.cols:
                raise ShapeError("extension row has the wrong width")
            body.append(tuple(coef(c) for c in next_row))
        if not body:
            return ExactMatrix.zeros(0, self.cols)
        return ExactMatrix(body)

    def reflect(self) -> ExactMatrix:
        """Reverse each row ``n`` within its first ``n+1`` entries."""
        if not self.is_lower_triangular():
            raise ShapeError("reflection is defined for lower-triangular matrices")
        out = []
        for n, r in enumerate(self.rows_):
            head = list(r[: n + 1])[::-1]
            out.append(head + list(r[n + 1:]))
        return ExactMatrix(out)

    def diagonal_sums(self) -> list:
        """``d_n = sum_k M[n-k, k]`` over entries inside the matrix."""
        if not self.is_square():
            raise ShapeError("diagonal sums need a square matrix")
        return [
            sum((self.rows_[n - k][k] for k in range(n + 1)), ZERO)
            for n in range(self.rows)
        ]

    def row_sums(self) -> list:
        return [sum(r, ZERO) for r in self.rows_]


def matrix_multiply(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b


def matrix_inverse(m: ExactMatrix) -> ExactMatrix:
    return m.inverse()


def transpose(m: ExactMatrix) -> ExactMatrix:
    return m.transpose()


def remove_top_row(m: ExactMatrix, next_row=None) -> ExactMatrix:
    return m.remove_top_row(next_row)


def reflect_triangle(m: ExactMatrix) -> ExactMatrix:
    return m.reflect()


def matrix_diagonal_sums(m: ExactMatrix) -> list:
    return m.diagonal_sums()


# -- the fixed matrices used throughout -------------------------------------


def sigma(n: int) -> ExactMatrix:
    """Lower-triangular all-ones matrix, the array ``(1/(1-x), x)``."""
    return ExactMatrix([[1 if j <= i else 0 for j in range(n)] for i in range(n)])


def sigma_inverse(n: int) -> ExactMatrix:
    """``(1-x, x)``: ones on the diagonal, minus ones just below."""
    return ExactMatrix(
        [[1 if j == i else (-1 if j == i - 1 else 0) for j in range(n)] for i in range(n)]
    )


def sigma_transpose(n: int) -> ExactMatrix:
    return sigma(n).transpose()


def sigma_transpose_inverse(n: int) -> ExactMatrix:
    return sigma_inverse(n).transpose()


def shift_matrix(n: int, cols: int | None = None) -> ExactMatrix:
    """``U`` with ones on the superdiagonal, so ``U @ M`` drops the top row of ``M``."""
    cols = n if cols is None else cols
    return ExactMatrix([[1 if j == i + 1 else 0 for j in range(cols)] for i in range(n)])


def sigma_tilde(n: int) -> ExactMatrix:
    """Identity with its first row replaced by ones."""
    return ExactMatrix([[1 if i == 0 or i == j else 0 for j in range(n)] for i in range(n)])


def binomial_matrix(n: int) -> ExactMatrix:
    rows = []
    for i in range(n):
        row, c = [], 1
        for j in range(n):
            row.append(c if j <= i else 0)
            c = c * (i - j) // (j + 1) if j < i else 0
        rows.append(row)
    return ExactMatrix(rows)


def constant_matrices(n: int) -> dict:
    return {
        "sigma": sigma(n),
        "sigma_inverse": sigma_inverse(n),
        "sigma_transpose": sigma_transpose(n),
        "sigma_transpose_inverse": sigma_transpose_inverse(n),
        "shift": shift_matrix(n),
        "sigma_tilde": sigma_tilde(n),
        "sigma_tilde_transpose": sigma_tilde(n).transpose(),
        "binomial": binomial_matrix(n),
    }
