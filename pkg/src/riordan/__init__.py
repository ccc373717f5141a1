"""Exact Riordan array toolkit: truncated power series, Riordan and related
arrays, row and column partial sums, Hessenberg inverses, production
matrices, an expression parser and a reproduction check suite.
"""
from .arrays import (
    AlmostRiordanPair,
    ExpRiordanPair,
    RiordanPair,
    almost_riordan_matrix,
    diagonal_sums,
    exp_riordan_matrix,
    ftra_apply,
    riordan_inverse,
    riordan_matrix,
    riordan_multiply,
    row_sums,
)
from .errors import *  # noqa: F401,F403
from .gfparse import eval_bivariate, eval_univariate, expand, parse, to_string, tokenize
from .hessenberg import (
    HessenbergMatrix,
    decompose,
    det_relation_check,
    partition,
    w_vector,
    x_vector,
    zhong_inverse,
)
from .matrix import ExactMatrix, binomial_matrix, shift_matrix, sigma, sigma_inverse, sigma_tilde
from .partial_sums import (
    col_partial_sum,
    row_partial_sum,
    row_ps_inverse_finite,
    row_ps_inverse_infinite,
)
from .production import generate_from_production, production_matrix
from .series import BivariateSeries, Polynomial, Series, compose, exp0, log1, pow_rational, revert

__version__ = "0.1.0"
