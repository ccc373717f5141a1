"""Registry of bit-exact reproduction checks.

Each case is data: an id, a section tag, a description and a builder taking
the working order.  Builders return a :class:`CaseResult`.  Golden
comparisons ignore the order and use the size of the stored display.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable

from . import golden as G
from .arrays import (
    ExpRiordanPair,
    RiordanPair,
    almost_riordan_matrix,
    exp_riordan_matrix,
    riordan_inverse,
    riordan_matrix,
)
from .gfparse import eval_bivariate, eval_univariate, parse
from .hessenberg import det_relation_check, p_block_identity_check, w_vector, x_vector, zhong_inverse
from .matrix import (
    ExactMatrix,
    shift_matrix,
    sigma,
    sigma_inverse,
    sigma_tilde,
    sigma_transpose,
    sigma_transpose_inverse,
)
from .partial_sums import (
    canonical_rowps_decomposition,
    col_partial_sum,
    commute_check,
    diag_sums_equal_check,
    h_bivariate_gf,
    original_array_decomposition,
    p_inverse_pair,
    row_partial_sum,
    row_ps_bivariate_gf,
    row_ps_inverse_finite,
    row_ps_inverse_infinite,
    row_ps_inverse_product_form,
)
from .phyllotaxis import (
    a_squared_check,
    binomial_sigma_tilde,
    build_A,
    c_involution_check,
    c_pair,
    conjecture_check,
    diagonal_sum_identities,
    factor_matrices,
    factorization_checks,
    final_production_array,
    generated_from_A,
    principal_inverses,
    signed_fibonacci,
)
from .production import (
    a_sequence_of_inverse,
    charpoly_rows_check,
    fourfold_product,
    fourfold_readoff,
    fourfold_target_production,
    fourfold_via_production,
    generate_from_production,
    is_riordan_production,
    production_matrix,
    stirling_production_check,
    two_stirling_pair,
)
from .series import Series

PASS, FAIL, CONJECTURE = "pass", "fail", "conjecture"


@dataclass(frozen=True)
class CaseResult:
    status: str
    detail: str = ""
    first_difference: list | None = None  # [row, col, got, expected] as strings


@dataclass(frozen=True)
class VerifyCase:
    id: str
    section: str
    description: str
    builder: Callable[[int], CaseResult]

    def run(self, order: int) -> CaseResult:
        try:
            return self.builder(order)
        except Exception as exc:  # a crashing case is a failing case
            return CaseResult(FAIL, f"{type(exc).__name__}: {exc}")


@dataclass(frozen=True)
class CaseReport:
    id: str
    section: str
    description: str
    status: str
    detail: str
    first_difference: list | None


# -- helpers ------------------------------------------------------------------


def _expr(text: str, order: int) -> Series:
    return eval_univariate(parse(text), order)


def _pair(g: str, f: str, order: int) -> RiordanPair:
    return RiordanPair(_expr(g, order), _expr(f, order))


def pascal(order: int = 12) -> RiordanPair:
    return RiordanPair.pascal(order)


def example_pair(order: int = 12) -> RiordanPair:
    return _pair("(1+x)/(1-2*x)", "x*(1-x)/(1-3*x)", order)


def _as_matrix(value) -> ExactMatrix:
    if isinstance(value, ExactMatrix):
        return value
    return ExactMatrix.lower(value)


def compare_matrices(got, expected) -> CaseResult:
    got, expected = _as_matrix(got), _as_matrix(expected)
    if got.shape != expected.shape:
        return CaseResult(FAIL, f"shape {got.shape} differs from expected {expected.shape}")
    for i in range(expected.rows):
        for j in range(expected.cols):
            if got[i, j] != expected[i, j]:
                a, b = format_entry(got[i, j]), format_entry(expected[i, j])
                return CaseResult(
                    FAIL,
                    f"entry ({i},{j}): got {a}, expected {b}",
                    [str(i), str(j), a, b],
                )
    return CaseResult(PASS, f"{expected.rows}x{expected.cols} bit-exact")


def compare_sequences(got, expected) -> CaseResult:
    got, expected = list(got), list(expected)
    for i, (a, b) in enumerate(zip(got, expected)):
        if a != b:
            fa, fb = format_entry(a), format_entry(b)
            return CaseResult(FAIL, f"term {i}: got {fa}, expected {fb}", [str(i), "0", fa, fb])
    if len(got) != len(expected):
        return CaseResult(FAIL, f"length {len(got)} differs from expected {len(expected)}")
    return CaseResult(PASS, f"{len(expected)} terms bit-exact")


def check(flag: bool, what: str) -> CaseResult:
    return CaseResult(PASS if flag else FAIL, what if flag else f"{what}: does not hold")


def checks(results: dict) -> CaseResult:
    bad = [k for k, v in results.items() if not v]
    if bad:
        return CaseResult(FAIL, "failed: " + ", ".join(bad))
    return CaseResult(PASS, "all of: " + ", ".join(results))


def format_entry(v) -> str:
    """Integers as ``n``, other rationals as ``p/q``."""
    return str(v)


def _grid(b, n: int) -> ExactMatrix:
    return ExactMatrix([[b.coeff(i, k) for k in range(n)] for i in range(n)])


# -- builders -----------------------------------------------------------------


def _pascal_diag_fib(order):
    from .phyllotaxis import fibonacci

    return compare_sequences(riordan_matrix(pascal(order + 2), order).diagonal_sums(), fibonacci(order + 1)[1:])


def _hessenberg_difference(_):
    p = pascal()
    return compare_matrices(row_ps_inverse_finite(p, 6) - row_ps_inverse_infinite(p, 6), ExactMatrix(G.PASCAL_H_DIFFERENCE_6))


def _product_form(order):
    results = {}
    for name, p in (("pascal", pascal(order + 2)), ("example", example_pair(order + 2))):
        results[name] = row_ps_inverse_product_form(p, order) == row_ps_inverse_infinite(p, order)
    # the display is of the infinite product, so build one size larger
    results["u_sigma_inverse_display"] = (shift_matrix(8) @ sigma_inverse(8)).leading(7) == ExactMatrix(G.U_TIMES_SIGMA_INVERSE_7)
    results["u_display"] = shift_matrix(7) == ExactMatrix(G.U_7)
    v = ExactMatrix(G.V_7)
    results["v_inverse_display"] = v.inverse() == ExactMatrix(G.V_INVERSE_7)
    results["sigma_v_is_sigma_transpose"] = sigma(7) @ v == sigma_transpose(7)
    return checks(results)


def _h_gf(order):
    results = {}
    for name, p in (("pascal", pascal(order + 2)), ("example", example_pair(order + 2))):
        h = row_ps_inverse_infinite(p, order)
        results[name] = _grid(h_bivariate_gf(p, order, order), order) == h
        results[name + "_rowps"] = _grid(row_ps_bivariate_gf(p, order, order), order) == row_partial_sum(p, order)
    return checks(results)


def _shifted_correction(_):
    """``H = (I - U) M^-1`` at finite size, with ``-U M^-1`` as displayed."""
    m_inv = riordan_matrix(riordan_inverse(example_pair()), 6)
    correction = -(shift_matrix(6) @ m_inv)
    r = compare_matrices(correction, ExactMatrix(G.EXAMPLE_SHIFTED_CORRECTION_6))
    if r.status != PASS:
        return r
    return compare_matrices(m_inv + correction, ExactMatrix(G.EXAMPLE_H_FINITE_6))


def _p_pair(_):
    pm = riordan_matrix(p_inverse_pair(example_pair()), 5)
    first = compare_matrices(pm, G.EXAMPLE_P_INVERSE_5)
    if first.status != PASS:
        return first
    return compare_matrices(pm.inverse(), G.EXAMPLE_P_5)


def _block(_):
    block, xs, w = canonical_rowps_decomposition(example_pair(), 6)
    r = compare_matrices(block, ExactMatrix(G.EXAMPLE_BLOCK_6))
    if r.status != PASS:
        return r
    return compare_sequences(xs, G.EXAMPLE_ROW_SUMS[:6])


def _decomposition(_):
    block, xs, w = canonical_rowps_decomposition(example_pair(), 6)
    rank_one = ExactMatrix([[a * b for b in w] for a in xs])
    r = compare_matrices(block + rank_one, ExactMatrix(G.EXAMPLE_ROW_PS_6))
    if r.status == PASS:
        return CaseResult(PASS, "S = block + x w^T, bit-exact 6x6")
    return r


def _original(_):
    first, second = original_array_decomposition(example_pair(), 6)
    r = compare_matrices(first, ExactMatrix(G.EXAMPLE_ORIGINAL_FIRST_6))
    if r.status != PASS:
        return r
    r = compare_matrices(second, ExactMatrix(G.EXAMPLE_ORIGINAL_SECOND_6))
    if r.status != PASS:
        return r
    return compare_matrices(first + second, G.EXAMPLE_6)


def _zhong_example(order):
    results = {}
    for name, p in (("pascal", pascal(order + 2)), ("example", example_pair(order + 2))):
        h = row_ps_inverse_finite(p, order)
        s = row_partial_sum(p, order)
        results[name + "_inverse"] = zhong_inverse(h) == s
        results[name + "_x_is_row_sums"] = x_vector(h) == list(riordan_matrix(p, order).row_sums())
        results[name + "_w_all_ones"] = all(v == 1 for v in w_vector(h))
        results[name + "_det_relation"] = det_relation_check(h)
        results[name + "_p_block"] = p_block_identity_check(p, order)
    return checks(results)


def _operator_laws(order):
    results = {}
    for name, p in (("pascal", pascal(order + 2)), ("example", example_pair(order + 2))):
        results[name + "_commute"] = commute_check(p, order)
        results[name + "_diag_sums"] = diag_sums_equal_check(p, order)
        results[name + "_colps"] = riordan_matrix(col_partial_sum(p), order) == sigma(order) @ riordan_matrix(p, order)
        results[name + "_rowps"] = row_partial_sum(p, order) == riordan_matrix(p, order) @ sigma_transpose(order)
    return checks(results)


def _a_sequence_shift(order):
    p = example_pair(order + 3)
    pm = production_matrix(riordan_matrix(riordan_inverse(p), order + 1))
    a = _expr("(1-3*x)/(1-x)", order)
    results = {
        "riordan_production": is_riordan_production(pm),
        "a_sequence_series": a_sequence_of_inverse(p, order).truncate(order) == a,
        "columns_are_shifts": all(
            pm[i, k] == (a.coeffs[i - k + 1] if i - k + 1 >= 0 else 0)
            for k in range(1, order)
            for i in range(order)
        ),
    }
    return checks(results)


def _fourfold_readoff(which):
    def run(order):
        p = pascal(order + 3) if which == "pascal" else example_pair(order + 3)
        got = fourfold_product(p, order)
        pm = production_matrix(riordan_matrix(riordan_inverse(p), order + 1))
        results = {
            "sigma_inverse_minus_production": got == fourfold_via_production(p, order),
            "entrywise_readoff": got == fourfold_readoff(pm, order),
        }
        return checks(results)

    return run


def _fourfold_target(which, sign):
    def run(_):
        n = 6
        p = pascal(n + 3) if which == "pascal" else example_pair(n + 3)
        return compare_matrices(fourfold_product(p, n), fourfold_target_production(p, n, sign=sign))

    return run


def _stirling_first(_):
    p = pascal(8)
    gen = generate_from_production(row_ps_inverse_finite(p, 6), 6)
    expected = exp_riordan_matrix(ExpRiordanPair(_expr("1/(1-x)^2", 8), _expr("log(1-x)", 8)), 6)
    r = compare_matrices(gen, G.STIRLING_FIRST_6)
    if r.status != PASS:
        return r
    return compare_matrices(expected, G.STIRLING_FIRST_6)


def _stirling_second(_):
    gen = generate_from_production(row_ps_inverse_finite(pascal(8), 6), 6)
    r = compare_matrices(gen.inverse(), G.STIRLING_SECOND_6)
    if r.status != PASS:
        return r
    return compare_matrices(exp_riordan_matrix(two_stirling_pair(8), 6), G.STIRLING_SECOND_6)


def _stirling_r(r):
    def run(order):
        return check(stirling_production_check(r, order), f"r={r}, N={order}")

    return run


def _charpoly(order):
    n = min(order, 6)
    return check(charpoly_rows_check(n), f"rows 0..{n}")


def _principal(_):
    for k, (got, exp) in enumerate(zip(principal_inverses(6), G.PRINCIPAL_INVERSES), start=1):
        r = compare_matrices(got, ExactMatrix(exp))
        if r.status != PASS:
            return CaseResult(FAIL, f"order {k}: {r.detail}", r.first_difference)
    return CaseResult(PASS, "six inverses bit-exact")


def _factor_displays(_):
    f7, f6, f5 = factor_matrices(7), factor_matrices(6), factor_matrices(5)
    pairs = [
        (f7["almost_left"], G.A_FACTOR_ALMOST_7),
        (f7["riordan_right"], G.A_FACTOR_RIORDAN_7),
        (f6["signed_ones"], G.A_FACTOR_SIGNED_ONES_6),
        (f6["inverse_binomial"], G.INVERSE_BINOMIAL_6),
        (f5["binomial"], G.TRIPLE_LEFT_5),
        (f5["middle"], G.TRIPLE_MIDDLE_5),
        (f5["inverse_binomial"], G.TRIPLE_RIGHT_5),
        (f6["difference"], G.A_INVERSE_DIFFERENCE_6),
    ]
    for got, exp in pairs:
        r = compare_matrices(got, exp)
        if r.status != PASS:
            return r
    return checks(factorization_checks(7).results)


def _c_involution(order):
    r = compare_matrices(almost_riordan_matrix(c_pair(6), 6), G.C_6)
    if r.status != PASS:
        return r
    return check(c_involution_check(order), f"C^2 = I at N={order}")


def _a_squared(order):
    n = max(order, 10)
    return check(a_squared_check(n), f"three pipelines agree at N={n}")


def _diag_identities(order):
    n = max(order, 12)
    rep = diagonal_sum_identities(n)
    r = checks(rep.results)
    if r.status != PASS:
        return r
    return compare_sequences(signed_fibonacci(11), G.SIGNED_FIBONACCI)


def _conjecture(order):
    rep = conjecture_check(order)
    if rep.verified:
        return CaseResult(CONJECTURE, rep.describe())
    return CaseResult(FAIL, rep.describe())


def _whitney(_):
    return compare_matrices(_grid(eval_bivariate(parse("1/((1-x)*(1-y-x*y))"), 6, 6), 6), ExactMatrix(G.WHITNEY_6))


def _whitney_rowps(_):
    return compare_matrices(_grid(eval_bivariate(parse("1/((1-y)*(1-x-x*y))"), 6, 6), 6), ExactMatrix(G.PASCAL_ROW_PS_6))


def _whitney_triangle(_):
    m = riordan_matrix(_pair("1/(1-x)", "x*(1+x)", 8), 6)
    r = compare_matrices(m, G.WHITNEY_TRIANGLE_6)
    if r.status != PASS:
        return r
    return compare_matrices(_grid(eval_bivariate(parse("1/((1-x)*(1-x*y-x^2*y))"), 6, 6), 6), G.WHITNEY_TRIANGLE_6)


def _reflection(_):
    m = riordan_matrix(_pair("1/(1-x)", "x*(1+x)", 8), 6)
    return compare_matrices(m.reflect(), G.KNIGHTS_MOVE_6)


def _knights(_):
    return compare_matrices(_grid(eval_bivariate(parse("1/((1-x*y)*(1-x-x^2*y))"), 6, 6), 6), G.KNIGHTS_MOVE_6)


def _golden(builder, expected):
    return lambda _order: compare_matrices(builder(), expected)


CASES = [
    # section 1
    VerifyCase("sec1.pascal", "1", "Pascal's triangle 7x7", _golden(lambda: riordan_matrix(pascal(), 7), G.PASCAL_7)),
    VerifyCase("sec1.colps.pascal", "1", "column partial sum of Pascal 7x7", _golden(lambda: riordan_matrix(col_partial_sum(pascal()), 7), G.PASCAL_COL_PS_7)),
    VerifyCase("sec1.rowps.pascal", "1", "row partial sum of Pascal 7x7", _golden(lambda: row_partial_sum(pascal(), 7), ExactMatrix(G.PASCAL_ROW_PS_7))),
    VerifyCase("sec1.sigma", "1", "Sigma and its inverse 6x6", _golden(lambda: sigma_inverse(6), G.SIGMA_INVERSE_6)),
    VerifyCase("sec1.sigma_transpose", "1", "Sigma^T and its inverse 7x7", _golden(lambda: sigma_transpose_inverse(7), ExactMatrix(G.SIGMA_T_INVERSE_7))),
    VerifyCase("sec1.diagsums.pascal", "1", "diagonal sums of Pascal are F_(n+1)", _pascal_diag_fib),
    VerifyCase("sec1.operator_laws", "1", "partial sums as matrix products; they commute; equal diagonal sums", _operator_laws),
    # section 2
    VerifyCase("sec2.hessenberg.finite.pascal", "2", "finite inverse of Pascal's row partial sum 6x6", _golden(lambda: row_ps_inverse_finite(pascal(), 6), ExactMatrix(G.PASCAL_H_FINITE_6))),
    VerifyCase("sec2.hessenberg.infinite.pascal", "2", "infinite-form inverse of Pascal's row partial sum 6x6", _golden(lambda: row_ps_inverse_infinite(pascal(), 6), ExactMatrix(G.PASCAL_H_INFINITE_6))),
    VerifyCase("sec2.hessenberg.difference.pascal", "2", "finite minus infinite differs only in the last row", _hessenberg_difference),
    VerifyCase("sec2.product_form", "2", "U (1-x,x) (-g,f)^-1 equals the infinite inverse", _product_form),
    VerifyCase("sec2.bivariate_gf", "2", "bivariate generating functions of S and H", _h_gf),
    # section 3
    VerifyCase("sec3.example.array", "3", "((1+x)/(1-2x), x(1-x)/(1-3x)) 6x6", _golden(lambda: riordan_matrix(example_pair(), 6), G.EXAMPLE_6)),
    VerifyCase("sec3.example.inverse", "3", "inverse of the example array 6x6", _golden(lambda: riordan_matrix(riordan_inverse(example_pair()), 6), G.EXAMPLE_INVERSE_6)),
    VerifyCase("sec3.rowps.example", "3", "row partial sum S of the example 6x6", _golden(lambda: row_partial_sum(example_pair(), 6), ExactMatrix(G.EXAMPLE_ROW_PS_6))),
    VerifyCase("sec3.hessenberg.shifted.example", "3", "H = M^-1 plus the shifted correction", _shifted_correction),
    VerifyCase("sec3.hessenberg.example", "3", "finite Hessenberg inverse of S 6x6", _golden(lambda: row_ps_inverse_finite(example_pair(), 6), ExactMatrix(G.EXAMPLE_H_FINITE_6))),
    # section 4
    VerifyCase("sec4.p_pair.example", "4", "P^-1 and P 5x5", _p_pair),
    VerifyCase("sec4.block.example", "4", "block matrix and row sums 1,4,12,38,128,450", _block),
    VerifyCase("sec4.decomposition.example", "4", "S = block + x w^T", _decomposition),
    VerifyCase("sec4.original.example", "4", "two-matrix decomposition of the array", _original),
    VerifyCase("sec4.zhong", "4", "rank-one inverse formula, x = row sums, w = ones", _zhong_example),
    # section 5
    VerifyCase("sec5.production_of_inverse.example", "5", "production matrix of M^-1 6x6", _golden(lambda: production_matrix(riordan_matrix(riordan_inverse(example_pair()), 7)), ExactMatrix(G.EXAMPLE_PRODUCTION_OF_INVERSE_6))),
    VerifyCase("sec5.a_sequence.example", "5", "columns 1+ shift the expansion of (1-3x)/(1-x)", _a_sequence_shift),
    VerifyCase("sec5.fourfold.readoff.pascal", "5", "four-fold product = Sigma^-1 - P Sigma^-1 (Pascal)", _fourfold_readoff("pascal")),
    VerifyCase("sec5.fourfold.readoff.example", "5", "four-fold product = Sigma^-1 - P Sigma^-1 (example)", _fourfold_readoff("example")),
    VerifyCase("sec5.fourfold.literal.pascal", "5", "four-fold product = production of (g/((1-x)(1-f)), f/((1-x)(1-f)))^-1 (Pascal), as stated", _fourfold_target("pascal", 1)),
    VerifyCase("sec5.fourfold.literal.example", "5", "four-fold product = production of (g/((1-x)(1-f)), f/((1-x)(1-f)))^-1 (example), as stated", _fourfold_target("example", 1)),
    VerifyCase("sec5.fourfold.signed.pascal", "5", "four-fold product = production of (g/((1-x)(1-f)), -f/((1-x)(1-f)))^-1 (Pascal)", _fourfold_target("pascal", -1)),
    VerifyCase("sec5.fourfold.signed.example", "5", "four-fold product = production of (g/((1-x)(1-f)), -f/((1-x)(1-f)))^-1 (example)", _fourfold_target("example", -1)),
    # section 6
    VerifyCase("sec6.rowps_gf", "6", "1/((1-y)(1-x-xy)) expands to Pascal's row partial sum", _whitney_rowps),
    VerifyCase("sec6.whitney", "6", "Whitney square array 6x6", _whitney),
    VerifyCase("sec6.whitney_triangle", "6", "(1/(1-x), x(1+x)) triangle and its g.f.", _whitney_triangle),
    VerifyCase("sec6.reflection", "6", "reflection of the Whitney triangle", _reflection),
    VerifyCase("sec6.knights_move", "6", "knights-move triangle from its g.f.", _knights),
    # section 7
    VerifyCase("sec7.stirling.first", "7", "Pascal's finite H generates [1/(1-x)^2, ln(1-x)]", _stirling_first),
    VerifyCase("sec7.stirling.second", "7", "its inverse is [e^(2x), 1-e^x]", _stirling_second),
    *[VerifyCase(f"sec7.stirling.r{r}", "7", f"inverse row partial sum of (1/(1-{r}x), x/(1-{r}x)) is a production matrix", _stirling_r(r)) for r in (1, 2, 3, 4)],
    VerifyCase("sec7.charpoly", "7", "rows of [e^(2x), 1-e^x] are characteristic polynomials", _charpoly),
    # section 8
    VerifyCase("sec8.binomial_sigma_tilde", "8", "B Sigma~ 6x6", _golden(lambda: binomial_sigma_tilde(6), ExactMatrix(G.BINOMIAL_SIGMA_TILDE_6))),
    VerifyCase("sec8.sigma_tilde", "8", "Sigma~ 6x6", _golden(lambda: sigma_tilde(6), ExactMatrix(G.SIGMA_TILDE_6))),
    VerifyCase("sec8.principal_inverses", "8", "six principal-submatrix inverses", _principal),
    VerifyCase("sec8.A", "8", "collected first rows A 7x7", _golden(lambda: build_A(7), G.A_7)),
    VerifyCase("sec8.A_inverse", "8", "A^-1 6x6", _golden(lambda: build_A(6).inverse(), G.A_INVERSE_6)),
    VerifyCase("sec8.factorizations", "8", "factor displays and the four factorizations", _factor_displays),
    VerifyCase("sec8.c_involution", "8", "C display and C^2 = I", _c_involution),
    VerifyCase("sec8.a_squared", "8", "A^2 via three pipelines", _a_squared),
    VerifyCase("sec8.diagonal_sums", "8", "diagonal-sum identities of A and A^-1", _diag_identities),
    VerifyCase("sec8.generated", "8", "matrix generated by A without its top row 6x6", _golden(lambda: generated_from_A(6), G.GENERATED_FROM_A_6)),
    VerifyCase("sec8.final_production", "8", "production array of the inverse 6x6", _golden(lambda: final_production_array(6), ExactMatrix(G.FINAL_PRODUCTION_6))),
    VerifyCase("sec8.conjecture", "8", "row polynomials match 1 + (1-x) sum (1-x)_i", _conjecture),
]

REGISTRY = {c.id: c for c in CASES}
if len(REGISTRY) != len(CASES):  # pragma: no cover
    raise RuntimeError("duplicate verify case id")


def case_ids() -> list:
    return sorted(REGISTRY)


@dataclass(frozen=True)
class Report:
    order: int
    cases: tuple

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.cases)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, CONJECTURE: 0}
        for c in self.cases:
            out[c.status] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "ok": self.ok,
            "counts": self.counts(),
            "cases": [asdict(c) for c in self.cases],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(d["order"], tuple(CaseReport(**c) for c in d["cases"]))

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def lines(self) -> list:
        width = max((len(c.id) for c in self.cases), default=0)
        out = [f"{c.id:<{width}}  {c.status.upper():<10}  {c.detail}" for c in self.cases]
        k = self.counts()
        out.append(f"{k[PASS]} passed, {k[FAIL]} failed, {k[CONJECTURE]} conjecture")
        return out


def run_cases(ids, order: int = 8, jobs: int = 1) -> Report:
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise KeyError(unknown[0])
    cases = [REGISTRY[i] for i in sorted(set(ids))]

    def one(case):
        r = case.run(order)
        return CaseReport(case.id, case.section, case.description, r.status, r.detail, r.first_difference)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(one, cases))
    else:
        results = [one(c) for c in cases]
    return Report(order, tuple(results))


def run_all(order: int = 8, jobs: int = 1) -> Report:
    return run_cases(case_ids(), order, jobs)
