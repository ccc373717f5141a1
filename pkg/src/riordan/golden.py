"""Matrices and sequences as printed in the source displays, transcribed verbatim.

Lower-triangular displays are stored as ragged rows (trailing zeros dropped);
full displays keep every entry.  Use :func:`square` to pad.
"""
from __future__ import annotations

from .matrix import ExactMatrix


def square(rows) -> ExactMatrix:
    return ExactMatrix.lower(rows)


PASCAL_7 = [
    [1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1],
    [1, 5, 10, 10, 5, 1], [1, 6, 15, 20, 15, 6, 1],
]

PASCAL_COL_PS_7 = [
    [1], [2, 1], [3, 3, 1], [4, 6, 4, 1], [5, 10, 10, 5, 1],
    [6, 15, 20, 15, 6, 1], [7, 21, 35, 35, 21, 7, 1],
]

PASCAL_ROW_PS_7 = [
    [1, 1, 1, 1, 1, 1, 1],
    [1, 2, 2, 2, 2, 2, 2],
    [1, 3, 4, 4, 4, 4, 4],
    [1, 4, 7, 8, 8, 8, 8],
    [1, 5, 11, 15, 16, 16, 16],
    [1, 6, 16, 26, 31, 32, 32],
    [1, 7, 22, 42, 57, 63, 64],
]

SIGMA_6 = [[1], [1, 1], [1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1]]

SIGMA_INVERSE_6 = [
    [1], [-1, 1], [0, -1, 1], [0, 0, -1, 1], [0, 0, 0, -1, 1], [0, 0, 0, 0, -1, 1],
]

SIGMA_T_7 = [[1 if j >= i else 0 for j in range(7)] for i in range(7)]

SIGMA_T_INVERSE_7 = [
    [1, -1, 0, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 0],
    [0, 0, 0, 1, -1, 0, 0],
    [0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 1],
]

U_7 = [[1 if j == i + 1 else 0 for j in range(7)] for i in range(7)]

U_TIMES_SIGMA_INVERSE_7 = [
    [-1, 1, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0],
    [0, 0, -1, 1, 0, 0, 0],
    [0, 0, 0, -1, 1, 0, 0],
    [0, 0, 0, 0, -1, 1, 0],
    [0, 0, 0, 0, 0, -1, 1],
    [0, 0, 0, 0, 0, 0, -1],
]

# ((1+x)/(1-2x), x(1-x)/(1-3x))
EXAMPLE_6 = [
    [1], [3, 1], [6, 5, 1], [12, 18, 7, 1], [24, 60, 34, 9, 1], [48, 192, 144, 54, 11, 1],
]

EXAMPLE_INVERSE_6 = [
    [1], [-3, 1], [9, -5, 1], [-21, 17, -7, 1], [39, -43, 29, -9, 1],
    [-63, 83, -85, 45, -11, 1],
]

EXAMPLE_ROW_PS_6 = [
    [1, 1, 1, 1, 1, 1],
    [3, 4, 4, 4, 4, 4],
    [6, 11, 12, 12, 12, 12],
    [12, 30, 37, 38, 38, 38],
    [24, 84, 118, 127, 128, 128],
    [48, 240, 384, 438, 449, 450],
]

EXAMPLE_H_FINITE_6 = [
    [4, -1, 0, 0, 0, 0],
    [-12, 6, -1, 0, 0, 0],
    [30, -22, 8, -1, 0, 0],
    [-60, 60, -36, 10, -1, 0],
    [102, -126, 114, -54, 12, -1],
    [-63, 83, -85, 45, -11, 1],
]

# the second summand of the (I + shifted -I) M^-1 display
EXAMPLE_SHIFTED_CORRECTION_6 = [
    [3, -1, 0, 0, 0, 0],
    [-9, 5, -1, 0, 0, 0],
    [21, -17, 7, -1, 0, 0],
    [-39, 43, -29, 9, -1, 0],
    [63, -83, 85, -45, 11, -1],
    [0, 0, 0, 0, 0, 0],
]

EXAMPLE_ROW_SUMS = [1, 4, 12, 38, 128, 450, 1624]

EXAMPLE_P_INVERSE_5 = [
    [-1], [-6, -1], [-26, -8, -1], [-104, -44, -10, -1], [-402, -210, -66, -12, -1],
]

EXAMPLE_P_5 = [
    [-1], [6, -1], [-22, 8, -1], [60, -36, 10, -1], [-126, 114, -54, 12, -1],
]

EXAMPLE_BLOCK_6 = [
    [0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0],
    [-6, -1, 0, 0, 0, 0],
    [-26, -8, -1, 0, 0, 0],
    [-104, -44, -10, -1, 0, 0],
    [-402, -210, -66, -12, -1, 0],
]

EXAMPLE_ORIGINAL_FIRST_6 = [
    [0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0],
    [-6, 5, 1, 0, 0, 0],
    [-26, 18, 7, 1, 0, 0],
    [-104, 60, 34, 9, 1, 0],
    [-402, 192, 144, 54, 11, 1],
]

EXAMPLE_ORIGINAL_SECOND_6 = [[v, 0, 0, 0, 0, 0] for v in (1, 4, 12, 38, 128, 450)]

EXAMPLE_PRODUCTION_OF_INVERSE_6 = [
    [-3, 1, 0, 0, 0, 0],
    [0, -2, 1, 0, 0, 0],
    [6, -2, -2, 1, 0, 0],
    [18, -2, -2, -2, 1, 0],
    [42, -2, -2, -2, -2, 1],
    [90, -2, -2, -2, -2, -2],
]

PASCAL_6 = PASCAL_7[:6]

PASCAL_ROW_PS_6 = [row[:6] for row in PASCAL_ROW_PS_7[:6]]

PASCAL_H_FINITE_6 = [
    [2, -1, 0, 0, 0, 0],
    [-2, 3, -1, 0, 0, 0],
    [2, -5, 4, -1, 0, 0],
    [-2, 7, -9, 5, -1, 0],
    [2, -9, 16, -14, 6, -1],
    [-1, 5, -10, 10, -5, 1],
]

PASCAL_H_INFINITE_6 = [
    [2, -1, 0, 0, 0, 0],
    [-2, 3, -1, 0, 0, 0],
    [2, -5, 4, -1, 0, 0],
    [-2, 7, -9, 5, -1, 0],
    [2, -9, 16, -14, 6, -1],
    [-2, 11, -25, 30, -20, 7],
]

# finite minus infinite, as printed
PASCAL_H_DIFFERENCE_6 = [[0] * 6] * 5 + [[1, -6, 15, -20, 15, -6]]

WHITNEY_6 = [
    [1, 1, 1, 1, 1, 1],
    [1, 2, 3, 4, 5, 6],
    [1, 2, 4, 7, 11, 16],
    [1, 2, 4, 8, 15, 26],
    [1, 2, 4, 8, 16, 31],
    [1, 2, 4, 8, 16, 32],
]

WHITNEY_TRIANGLE_6 = [
    [1], [1, 1], [1, 2, 1], [1, 2, 3, 1], [1, 2, 4, 4, 1], [1, 2, 4, 7, 5, 1],
]

KNIGHTS_MOVE_6 = [
    [1], [1, 1], [1, 2, 1], [1, 3, 2, 1], [1, 4, 4, 2, 1], [1, 5, 7, 4, 2, 1],
]

STIRLING_FIRST_6 = [
    [1], [2, -1], [6, -5, 1], [24, -26, 9, -1], [120, -154, 71, -14, 1],
    [720, -1044, 580, -155, 20, -1],
]

STIRLING_SECOND_6 = [
    [1], [2, -1], [4, -5, 1], [8, -19, 9, -1], [16, -65, 55, -14, 1],
    [32, -211, 285, -125, 20, -1],
]

SIGMA_TILDE_6 = [
    [1, 1, 1, 1, 1, 1],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
]

BINOMIAL_SIGMA_TILDE_6 = [
    [1, 1, 1, 1, 1, 1],
    [1, 2, 1, 1, 1, 1],
    [1, 3, 2, 1, 1, 1],
    [1, 4, 4, 2, 1, 1],
    [1, 5, 7, 5, 2, 1],
    [1, 6, 11, 11, 6, 2],
]

PRINCIPAL_INVERSES = [
    [[1]],
    [[2, -1], [-1, 1]],
    [[1, 1, -1], [-1, 1, 0], [1, -2, 1]],
    [[2, -2, 2, -1], [-1, 1, 0, 0], [1, -2, 1, 0], [-1, 3, -3, 1]],
    [
        [1, 2, -4, 3, -1],
        [-1, 1, 0, 0, 0],
        [1, -2, 1, 0, 0],
        [-1, 3, -3, 1, 0],
        [1, -4, 6, -4, 1],
    ],
    [
        [2, -3, 6, -7, 4, -1],
        [-1, 1, 0, 0, 0, 0],
        [1, -2, 1, 0, 0, 0],
        [-1, 3, -3, 1, 0, 0],
        [1, -4, 6, -4, 1, 0],
        [-1, 5, -10, 10, -5, 1],
    ],
]

A_7 = [
    [1], [2, -1], [1, 1, -1], [2, -2, 2, -1], [1, 2, -4, 3, -1],
    [2, -3, 6, -7, 4, -1], [1, 3, -9, 13, -11, 5, -1],
]

A_FACTOR_ALMOST_7 = [
    [1], [2, -1], [1, 0, -1], [2, -1, 0, -1], [1, 0, -1, 0, -1],
    [2, -1, 0, -1, 0, -1], [1, 0, -1, 0, -1, 0, -1],
]

A_FACTOR_RIORDAN_7 = [
    [1], [0, 1], [0, -1, 1], [0, 1, -2, 1], [0, -1, 3, -3, 1],
    [0, 1, -4, 6, -4, 1], [0, -1, 5, -10, 10, -5, 1],
]

A_FACTOR_SIGNED_ONES_6 = [
    [1], [1, -1], [1, -1, -1], [1, -1, -1, -1], [1, -1, -1, -1, -1],
    [1, -1, -1, -1, -1, -1],
]

INVERSE_BINOMIAL_6 = [
    [1], [-1, 1], [1, -2, 1], [-1, 3, -3, 1], [1, -4, 6, -4, 1], [-1, 5, -10, 10, -5, 1],
]

TRIPLE_LEFT_5 = [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1]]

TRIPLE_MIDDLE_5 = [[1], [0, -1], [0, 1, -1], [0, -1, 2, -1], [0, 1, -3, 3, -1]]

TRIPLE_RIGHT_5 = [[1], [-1, 1], [1, -2, 1], [-1, 3, -3, 1], [1, -4, 6, -4, 1]]

A_INVERSE_6 = [
    [1], [2, -1], [3, -1, -1], [4, 0, -2, -1], [5, 2, -2, -3, -1], [6, 5, 0, -5, -4, -1],
]

A_INVERSE_DIFFERENCE_6 = [
    [1], [1, -1], [0, 1, -1], [0, 0, 1, -1], [0, 0, 0, 1, -1], [0, 0, 0, 0, 1, -1],
]

C_6 = [
    [1], [2, -1], [2, 0, -1], [2, 0, 0, -1], [2, 0, 0, 0, -1], [2, 0, 0, 0, 0, -1],
]

SIGNED_FIBONACCI = [1, 1, -2, 3, -5, 8, -13, 21, -34, 55, -89]

GENERATED_FROM_A_6 = [
    [1], [2, -1], [3, -3, 1], [5, -8, 5, -1], [11, -25, 22, -8, 1],
    [35, -99, 107, -53, 12, -1],
]

# row polynomials P_0..P_4, coefficients lowest degree first
ROW_POLYNOMIALS = [
    [1],
    [2, -1],
    [3, -3, 1],
    [5, -8, 5, -1],
    [11, -25, 22, -8, 1],
]

FINAL_PRODUCTION_6 = [
    [2, -1, 0, 0, 0, 0],
    [1, 1, -1, 0, 0, 0],
    [1, -1, 2, -1, 0, 0],
    [1, -1, -1, 3, -1, 0],
    [1, -1, -1, -1, 4, -1],
    [1, -1, -1, -1, -1, 5],
]

# auxiliary matrix with Sigma . V = Sigma^T, and its finite inverse
V_7 = [[1] * 7] + [[-1 if j == i - 1 else 0 for j in range(7)] for i in range(1, 7)]

V_INVERSE_7 = [[-1 if j == i + 1 else 0 for j in range(7)] for i in range(6)] + [[1] * 7]
