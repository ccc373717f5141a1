from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from riordan import golden as G
from riordan.errors import EvaluationError, GrammarError, LexError, ParseError
from riordan.gfparse import (
    Add,
    Div,
    Exp,
    Log,
    Mul,
    Negate,
    Pow,
    Rational,
    Sub,
    VarX,
    eval_bivariate,
    eval_univariate,
    expand,
    parse,
    to_string,
    tokenize,
)
from riordan.matrix import ExactMatrix

one, two, three = Rational(Fraction(1)), Rational(Fraction(2)), Rational(Fraction(3))
x = VarX()


def grid(text, n=6):
    b = eval_bivariate(parse(text), n, n)
    return ExactMatrix([[b.coeff(i, k) for k in range(n)] for i in range(n)])


# -- tokenizer ---------------------------------------------------------------


def test_token_count_and_positions():
    toks = tokenize("(1+x)/(1-2*x)")
    # ( 1 + x ) / ( 1 - 2 * x ) : every character is a token
    assert len(toks) == 13
    assert toks[-1].kind == ")"
    positions = [t.pos for t in toks]
    assert positions == sorted(set(positions))


def test_ln_alias():
    toks = tokenize("ln(1-x)")
    assert toks[0].kind == "func" and toks[0].text == "ln"
    assert parse("ln(1-x)") == parse("log(1-x)")


def test_lex_error_position():
    with pytest.raises(LexError) as info:
        tokenize("1 @ x")
    assert info.value.position == 2


def test_implicit_multiplication_rejected():
    with pytest.raises(LexError):
        tokenize("2x")


# -- parser ------------------------------------------------------------------


def test_parse_examples():
    assert parse("x*(1-x)/(1-3*x)") == Div(Mul(x, Sub(one, x)), Sub(one, Mul(three, x)))
    assert parse("(1-2*x)^(-3/2)") == Pow(Sub(one, Mul(two, x)), Fraction(-3, 2))


def test_parse_error_expected_operand():
    with pytest.raises(GrammarError) as info:
        parse("1+")
    assert "expected operand" in str(info.value)
    assert info.value.position == 2


@pytest.mark.parametrize("text", ["(1+x", "1+x)", "x^x", "*x", "log x", "x^(1/0)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_precedence():
    assert parse("1+2*x") == Add(one, Mul(two, x))
    assert parse("1-x-x") == Sub(Sub(one, x), x)
    assert parse("-x^2") == Negate(Pow(x, Fraction(2)))
    assert parse("exp(x)") == Exp(x)
    assert parse("log(1-x)") == Log(Sub(one, x))


@pytest.mark.parametrize(
    "text",
    [
        "x*(1-x)/(1-3*x)",
        "(1-2*x)^(-3/2)",
        "1/((1-x)*(1-y-x*y))",
        "-(1+x)^3/(2-x)",
        "log(1/(1-x)) - exp(2*x)",
        "1-(x-y)",
        "x/(y/x)",
    ],
)
def test_round_trip(text):
    e = parse(text)
    assert parse(to_string(e)) == e


# -- evaluation ----------------------------------------------------------------


def test_eval_univariate_examples():
    assert list(eval_univariate(parse("(1+x)/(1-2*x)"), 6)) == [1, 3, 6, 12, 24, 48]
    assert list(eval_univariate(parse("1/(1-x)"), 4)) == [1, 1, 1, 1]
    assert list(eval_univariate(parse("log(1/(1-x))"), 4)) == [0, 1, Fraction(1, 2), Fraction(1, 3)]


def test_eval_cancels_powers_of_x():
    assert list(expand("x/(x+x^2)", 4)) == [1, -1, 1, -1]
    assert list(expand("(1-(1-4*x)^(1/2))/(2*x)", 6)) == [1, 1, 2, 5, 14, 42]


def test_eval_arity_error():
    with pytest.raises(EvaluationError):
        eval_univariate(parse("1/(1-y)"), 4)


def test_eval_domain_error_carries_position():
    with pytest.raises(EvaluationError) as info:
        expand("1 + 1/x", 4)
    assert info.value.position == 5
    with pytest.raises(EvaluationError) as info:
        expand("log(2-x)", 4)
    assert info.value.position == 0


def test_whitney_square():
    assert grid("1/((1-x)*(1-y-x*y))") == ExactMatrix(G.WHITNEY_6)


def test_knights_move():
    assert grid("1/((1-x*y)*(1-x-x^2*y))") == ExactMatrix.lower(G.KNIGHTS_MOVE_6)


def test_whitney_triangle():
    assert grid("1/((1-x)*(1-x*y-x^2*y))") == ExactMatrix.lower(G.WHITNEY_TRIANGLE_6)


def test_pascal_row_partial_sum_gf():
    assert grid("1/((1-y)*(1-x-x*y))") == ExactMatrix(G.PASCAL_ROW_PS_6)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5))
def test_polynomial_text_expands_to_its_coefficients(cs):
    text = " + ".join(f"({c})*x^{k}" for k, c in enumerate(cs))
    got = list(expand(text, len(cs) + 2))
    assert got == cs + [0, 0]
