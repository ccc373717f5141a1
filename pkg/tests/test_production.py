import random
from fractions import Fraction

import pytest

from riordan import golden as G
from riordan.arrays import RiordanPair, exp_riordan_matrix, riordan_inverse, riordan_matrix
from riordan.errors import ShapeError
from riordan.matrix import ExactMatrix, shift_matrix, sigma_inverse
from riordan.partial_sums import row_ps_inverse_finite, row_ps_inverse_infinite
from riordan.phyllotaxis import build_A
from riordan.production import (
    a_seq_of_fourfold_target,
    a_sequence,
    a_sequence_of_inverse,
    charpoly_rows_check,
    characteristic_rows,
    fourfold_product,
    fourfold_readoff,
    fourfold_target_production,
    fourfold_via_production,
    generate_from_production,
    is_riordan_production,
    production_matrix,
    stirling_pair,
    stirling_production_check,
    two_stirling_pair,
    z_sequence,
    z_sequence_of_inverse,
)
from riordan.series import Series

from conftest import lower, series


def test_production_of_example_inverse(example):
    pm = production_matrix(riordan_matrix(riordan_inverse(example), 7))
    assert pm == ExactMatrix(G.EXAMPLE_PRODUCTION_OF_INVERSE_6)


def test_production_of_identity_is_shift():
    assert production_matrix(ExactMatrix.identity(6)) == shift_matrix(5)


def test_production_of_pascal(pascal):
    pm = production_matrix(riordan_matrix(pascal, 7))
    expected = ExactMatrix([[1 if j in (i, i + 1) else 0 for j in range(6)] for i in range(6)])
    assert pm == expected


def test_production_rejects_bad_shapes():
    with pytest.raises(ShapeError):
        production_matrix(ExactMatrix([[1, 2], [3, 4]]))
    with pytest.raises(ShapeError):
        production_matrix(ExactMatrix([[1]]))


def test_a_and_z_sequences(example, pascal, identity_pair):
    assert list(a_sequence_of_inverse(example, 6).truncate(6)) == [1, -2, -2, -2, -2, -2]
    assert a_sequence_of_inverse(example, 6).truncate(6) == series("(1-3*x)/(1-x)", 6)
    assert list(a_sequence(pascal, 6).truncate(6)) == [1, 1, 0, 0, 0, 0]
    assert z_sequence_of_inverse(identity_pair, 6).truncate(6) == Series.zero(6)
    z = z_sequence_of_inverse(example, 6).truncate(6)
    assert list(z) == [-3, 0, 6, 18, 42, 90]


def test_sequences_match_production_columns(example):
    n = 6
    for p in (example, riordan_inverse(example)):
        pm = production_matrix(riordan_matrix(p, n + 1))
        assert list(a_sequence(p, n).truncate(n)) == [pm[i, 1] for i in range(n)]
        assert list(z_sequence(p, n).truncate(n)) == [pm[i, 0] for i in range(n)]


def test_generate_from_production(pascal):
    h = row_ps_inverse_finite(pascal, 6)
    assert generate_from_production(h, 6) == lower(G.STIRLING_FIRST_6)
    assert generate_from_production(shift_matrix(6), 6) == ExactMatrix.identity(6)
    assert generate_from_production(build_A(7).remove_top_row(), 6) == lower(G.GENERATED_FROM_A_6)


def test_generate_inverts_production(example):
    m = riordan_matrix(example, 8)
    assert generate_from_production(production_matrix(m), 7) == m.leading(7)


def test_is_riordan_production(pascal, example):
    assert is_riordan_production(production_matrix(riordan_matrix(pascal, 7)))
    assert is_riordan_production(ExactMatrix(G.EXAMPLE_PRODUCTION_OF_INVERSE_6))
    bad = ExactMatrix([[1, 1, 0], [2, 3, 1], [0, 5, 7]])
    assert not is_riordan_production(bad)


def test_fourfold_symbolic_readoff():
    rng = random.Random(3)
    n = 6
    size = n + 1  # the last column of P . Sigma^-1 reads column n of P
    greek = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(size)]
    latin = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(size)]
    # P begins [[1, 1], [alpha, r, 1], [beta, s, r, 1], ...]
    z = [Fraction(1)] + greek[: size - 1]
    a = [Fraction(1)] + latin[: size - 1]
    pm = ExactMatrix(
        [[z[i]] + [a[i - k + 1] if 0 <= i - k + 1 else 0 for k in range(1, size)] for i in range(size)]
    )
    got = fourfold_readoff(pm, n)
    alpha, beta = z[1], z[2]
    r, s, t = a[1], a[2], a[3]
    assert got.row(0)[:2] == (1, -1)
    assert got.row(1)[:3] == (-alpha + r - 1, 2 - r, -1)
    assert got.row(2)[:4] == (s - beta, r - s - 1, 2 - r, -1)
    assert got[3, 1] == s - t
    direct = sigma_inverse(size) - pm @ sigma_inverse(size)
    assert got == direct.leading(n)


@pytest.mark.parametrize("which", ["pascal", "example", "identity_pair"])
def test_fourfold_product_equals_sigma_inverse_minus_production(which, request):
    p = request.getfixturevalue(which)
    n = 6
    got = fourfold_product(p, n)
    assert got == fourfold_via_production(p, n)
    pm = production_matrix(riordan_matrix(riordan_inverse(p), n + 1))
    assert got == fourfold_readoff(pm, n)


def test_fourfold_of_identity():
    n = 6
    p = RiordanPair.identity(n + 3)
    expected = (sigma_inverse(n + 1) - shift_matrix(n + 1) @ sigma_inverse(n + 1)).leading(n)
    assert fourfold_product(p, n) == expected


def test_fourfold_is_riordan_production(pascal, example):
    for p in (pascal, example):
        assert is_riordan_production(fourfold_product(p, 6))


def test_fourfold_equals_signed_target(pascal, example):
    for p in (pascal, example):
        assert fourfold_product(p, 6) == fourfold_target_production(p, 6, sign=-1)
        # the unsigned target gives the negated matrix
        assert fourfold_product(p, 6) == -fourfold_target_production(p, 6, sign=1)


def test_a_seq_of_fourfold_target(pascal, example, identity_pair):
    assert list(a_seq_of_fourfold_target(identity_pair, 6)) == [1, -2, 1, 0, 0, 0]
    for p in (pascal, example):
        n = 6
        pm = production_matrix(riordan_matrix(riordan_inverse(p), n + 1))
        r, s, t, u, v = (pm[i, 1] for i in range(1, 6))
        assert list(a_seq_of_fourfold_target(p, n)) == [1, r - 2, -r + s + 1, t - s, u - t, v - u]
        # column 1 of the four-fold product is minus this sequence
        four = fourfold_product(p, n)
        a = a_seq_of_fourfold_target(p, n)
        assert [four[i, 1] for i in range(n)] == [-a[i] for i in range(n)]


def test_stirling_pair_matrix():
    m = exp_riordan_matrix(stirling_pair(1, 8), 6)
    assert m == lower(G.STIRLING_FIRST_6)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_stirling_production(r):
    assert stirling_production_check(r, 6)
    assert stirling_production_check(r, 8)


def test_stirling_infinite_vs_finite(pascal):
    h_inf = row_ps_inverse_infinite(pascal, 6)
    h_fin = row_ps_inverse_finite(pascal, 6)
    assert generate_from_production(h_inf, 6) == generate_from_production(h_fin, 6)


def test_two_stirling_inverse():
    m = exp_riordan_matrix(two_stirling_pair(8), 6)
    assert m == lower(G.STIRLING_SECOND_6)
    assert m.inverse() == lower(G.STIRLING_FIRST_6)


def test_characteristic_rows():
    rows = characteristic_rows(3)
    assert rows.row(0) == (1, 0, 0)
    assert rows.row(1) == (2, -1, 0)
    assert rows.row(2) == (4, -5, 1)
    for n in range(1, 7):
        assert charpoly_rows_check(n)
