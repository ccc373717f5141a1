"""Generating-function expressions: tokenizer, recursive-descent parser, evaluator.

Grammar (lowest to highest binding)::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := ('-' | '+') unary | power
    power    := atom ['^' exponent]
    exponent := ['-' | '+'] NUMBER ['^' exponent]
              | '(' ['-' | '+'] NUMBER ['/' NUMBER] ')'
    atom     := NUMBER | 'x' | 'y' | FUNC '(' expr ')' | '(' expr ')'

``NUMBER`` is a nonnegative integer literal.

``FUNC`` is ``log``, ``ln`` (same as ``log``) or ``exp``.  Multiplication
is always explicit: ``2x`` is rejected by the tokenizer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import EvaluationError, GrammarError, LexError, SeriesError
from .series import BivariateSeries, Series

NUMBER = "number"
VAR_X = "x"
VAR_Y = "y"
OP = "op"
LPAREN = "("
RPAREN = ")"
FUNC = "func"

FUNCTIONS = {"log": "log", "ln": "log", "exp": "exp"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and (text[i].isalpha() or text[i] == "_"):
                raise LexError("implicit multiplication is not allowed", i)
            tokens.append(Token(NUMBER, text[start:i], start))
        elif ch.isalpha():
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            word = text[start:i]
            if word == "x":
                tokens.append(Token(VAR_X, word, start))
            elif word == "y":
                tokens.append(Token(VAR_Y, word, start))
            elif word in FUNCTIONS:
                tokens.append(Token(FUNC, word, start))
            else:
                raise LexError(f"unknown identifier {word!r}", start)
        elif ch in "+-*/^":
            tokens.append(Token(OP, ch, i))
            i += 1
        elif ch == "(":
            tokens.append(Token(LPAREN, ch, i))
            i += 1
        elif ch == ")":
            tokens.append(Token(RPAREN, ch, i))
            i += 1
        else:
            raise LexError(f"unexpected character {ch!r}", i)
    return tokens


# -- AST -------------------------------------------------------------------
# ``pos`` is carried for error messages and ignored by equality.


@dataclass(frozen=True)
class Rational:
    value: Fraction
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class VarX:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class VarY:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Negate:
    operand: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: Fraction
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Log:
    operand: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Exp:
    operand: "Expr"
    pos: int = field(default=0, compare=False)


Expr = Union[Rational, VarX, VarY, Negate, Add, Sub, Mul, Div, Pow, Log, Exp]


class _Parser:
    def __init__(self, tokens, length):
        self.tokens = tokens
        self.i = 0
        self.end = length

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def here(self):
        tok = self.peek()
        return tok.pos if tok else self.end

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def at_op(self, *ops):
        tok = self.peek()
        return tok is not None and tok.kind == OP and tok.text in ops

    def expect(self, kind, what):
        tok = self.peek()
        if tok is None or tok.kind != kind:
            raise GrammarError(f"expected {what}", self.here())
        return self.take()

    def parse(self):
        if not self.tokens:
            raise GrammarError("expected operand", 0)
        e = self.expr()
        if self.peek() is not None:
            raise GrammarError(f"unexpected token {self.peek().text!r}", self.here())
        return e

    def expr(self):
        left = self.term()
        while self.at_op("+", "-"):
            op = self.take()
            right = self.term()
            left = (Add if op.text == "+" else Sub)(left, right, op.pos)
        return left

    def term(self):
        left = self.unary()
        while self.at_op("*", "/"):
            op = self.take()
            right = self.unary()
            left = (Mul if op.text == "*" else Div)(left, right, op.pos)
        return left

    def unary(self):
        if self.at_op("-"):
            op = self.take()
            return Negate(self.unary(), op.pos)
        if self.at_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            op = self.take()
            return Pow(base, self.exponent(), op.pos)
        return base

    def _signed_number(self):
        sign = 1
        if self.at_op("-", "+"):
            sign = -1 if self.take().text == "-" else 1
        tok = self.expect(NUMBER, "numeric exponent")
        return sign * Fraction(tok.text)

    def exponent(self):
        tok = self.peek()
        if tok is not None and tok.kind == LPAREN:
            self.take()
            value = self._signed_number()
            if self.at_op("/"):
                self.take()
                den = self.expect(NUMBER, "exponent denominator")
                d = Fraction(den.text)
                if not d:
                    raise GrammarError("zero exponent denominator", den.pos)
                value = value / d
            self.expect(RPAREN, "')' closing the exponent")
        else:
            value = self._signed_number()
        if self.at_op("^"):
            op = self.take()
            outer = self.exponent()
            if outer.denominator != 1:
                raise GrammarError("stacked exponents must be integers", op.pos)
            value = value ** int(outer)
            if not isinstance(value, Fraction):
                value = Fraction(value)
        return value

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise GrammarError("expected operand", self.end)
        if tok.kind == NUMBER:
            self.take()
            return Rational(Fraction(tok.text), tok.pos)
        if tok.kind == VAR_X:
            self.take()
            return VarX(tok.pos)
        if tok.kind == VAR_Y:
            self.take()
            return VarY(tok.pos)
        if tok.kind == FUNC:
            self.take()
            self.expect(LPAREN, f"'(' after {tok.text}")
            inner = self.expr()
            self.expect(RPAREN, "')'")
            return (Log if FUNCTIONS[tok.text] == "log" else Exp)(inner, tok.pos)
        if tok.kind == LPAREN:
            self.take()
            inner = self.expr()
            self.expect(RPAREN, "')'")
            return inner
        raise GrammarError("expected operand", tok.pos)


def parse(source) -> Expr:
    """Parse a string, or a token list from :func:`tokenize`, into an AST."""
    if isinstance(source, str):
        return _Parser(tokenize(source), len(source)).parse()
    tokens = list(source)
    end = tokens[-1].pos + len(tokens[-1].text) if tokens else 0
    return _Parser(tokens, end).parse()


# -- printing ----------------------------------------------------------------

_PREC = {Add: 1, Sub: 1, Mul: 2, Div: 2, Negate: 3, Pow: 4}


def _prec(e) -> int:
    return _PREC.get(type(e), 5)


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_string(e: Expr) -> str:
    """Render an AST so that :func:`parse` reproduces it."""
    if isinstance(e, Rational):
        return str(e.value)
    if isinstance(e, VarX):
        return "x"
    if isinstance(e, VarY):
        return "y"
    if isinstance(e, (Log, Exp)):
        name = "log" if isinstance(e, Log) else "exp"
        return f"{name}({to_string(e.operand)})"
    if isinstance(e, Negate):
        inner = to_string(e.operand)
        if _prec(e.operand) < 3:
            inner = f"({inner})"
        return "-" + inner
    if isinstance(e, Pow):
        base = to_string(e.base)
        if _prec(e.base) <= 4:
            base = f"({base})"
        q = e.exponent
        if q.denominator == 1 and q >= 0:
            exp = str(q.numerator)
        else:
            exp = f"({_fmt_rational(q)})"
        return f"{base}^{exp}"
    left, right = e.left, e.right
    p = _prec(e)
    ls, rs = to_string(left), to_string(right)
    if _prec(left) < p:
        ls = f"({ls})"
    if _prec(right) <= p:
        rs = f"({rs})"
    sym = {Add: "+", Sub: "-", Mul: "*", Div: "/"}[type(e)]
    return f"{ls} {sym} {rs}"


# -- evaluation --------------------------------------------------------------


def contains_y(e: Expr) -> bool:
    if isinstance(e, VarY):
        return True
    if isinstance(e, (Rational, VarX)):
        return False
    if isinstance(e, (Negate, Log, Exp)):
        return contains_y(e.operand)
    if isinstance(e, Pow):
        return contains_y(e.base)
    return contains_y(e.left) or contains_y(e.right)


def _evaluate(e: Expr, make_const, make_x, make_y):
    def ev(node):
        try:
            if isinstance(node, Rational):
                return make_const(node.value)
            if isinstance(node, VarX):
                return make_x()
            if isinstance(node, VarY):
                return make_y(node)
            if isinstance(node, Negate):
                return -ev(node.operand)
            if isinstance(node, Add):
                return ev(node.left) + ev(node.right)
            if isinstance(node, Sub):
                return ev(node.left) - ev(node.right)
            if isinstance(node, Mul):
                return ev(node.left) * ev(node.right)
            if isinstance(node, Div):
                return ev(node.left).div(ev(node.right), cancel=True)
            if isinstance(node, Pow):
                base = ev(node.base)
                q = node.exponent
                if q.denominator == 1:
                    return base ** int(q)
                return base.pow_rational(q.numerator, q.denominator)
            if isinstance(node, Log):
                return ev(node.operand).log1()
            if isinstance(node, Exp):
                return ev(node.operand).exp0()
        except EvaluationError:
            raise
        except (SeriesError, ZeroDivisionError) as exc:
            raise EvaluationError(str(exc), node.pos) from exc
        raise TypeError(f"unknown node {node!r}")

    return ev(e)


def _as_expr(e) -> Expr:
    return parse(e) if isinstance(e, str) else e


def _max_slack(order: int) -> int:
    return 4 * order + 16


def eval_univariate(e, order: int) -> Series:
    """Expand an ``x``-only expression to ``order`` exact coefficients.

    Division cancels common powers of ``x``; the working order grows until
    the cancellations leave at least ``order`` coefficients.
    """
    e = _as_expr(e)

    def no_y(node):
        raise EvaluationError("variable y in a univariate expression", node.pos)

    slack = 0
    while True:
        work = order + slack
        result = _evaluate(
            e, lambda c: Series.const(c, work), lambda: Series.x(work), no_y
        )
        if result.order >= order:
            return result.truncate(order)
        slack += order - result.order
        if slack > _max_slack(order):
            raise EvaluationError("cancellation consumed too many orders", 0)


def eval_bivariate(e, order_x: int, order_y: int) -> BivariateSeries:
    """Expand as a grid with ``grid[n][k] = [x^n y^k]``."""
    e = _as_expr(e)
    slack = 0
    while True:
        nx = order_x + slack
        result = _evaluate(
            e,
            lambda c: BivariateSeries.const(c, nx, order_y),
            lambda: BivariateSeries.x(nx, order_y),
            lambda node: BivariateSeries.y(nx, order_y),
        )
        if result.order_x >= order_x:
            return result.truncate(order_x, order_y)
        slack += order_x - result.order_x
        if slack > _max_slack(order_x):
            raise EvaluationError("cancellation consumed too many orders", 0)


def expand(text: str, order: int) -> Series:
    return eval_univariate(parse(text), order)
