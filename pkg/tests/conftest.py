import sys
from fractions import Fraction

import pytest

from riordan.arrays import RiordanPair
from riordan.gfparse import eval_univariate, parse
from riordan.matrix import ExactMatrix


def series(text, order):
    return eval_univariate(parse(text), order)


def pair(g, f, order=12):
    return RiordanPair(series(g, order), series(f, order))


def lower(rows):
    return ExactMatrix.lower(rows)


def F(*vals):
    return [Fraction(v) for v in vals]


@pytest.fixture
def pascal():
    return RiordanPair.pascal(12)


@pytest.fixture
def example():
    return pair("(1+x)/(1-2*x)", "x*(1-x)/(1-3*x)")


@pytest.fixture
def identity_pair():
    return RiordanPair.identity(12)


def random_hessenberg(rng, n):
    """Integer lower Hessenberg, entries in [-9, 9], superdiagonal in {-2, -1, 1, 2}, nonsingular."""
    while True:
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if j <= i:
                    row.append(rng.randint(-9, 9))
                elif j == i + 1:
                    row.append(rng.choice((-2, -1, 1, 2)))
                else:
                    row.append(0)
            rows.append(row)
        m = ExactMatrix(rows)
        if m.determinant():
            return m


def random_pair(rng, order):
    """Normalized pair with small integer coefficients."""
    from riordan.series import Series

    g = Series([1] + [rng.randint(-4, 4) for _ in range(order - 1)])
    f = Series([0, 1] + [rng.randint(-4, 4) for _ in range(order - 2)])
    return RiordanPair(g, f).require_normalized()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
