import random
from fractions import Fraction

import pytest

from riordan import golden as G
from riordan.arrays import riordan_matrix
from riordan.errors import HessenbergError, SingularMatrixError
from riordan.hessenberg import (
    HessenbergMatrix,
    decompose,
    det_relation_check,
    p_block_identity_check,
    partition,
    w_vector,
    x_vector,
    zhong_inverse,
)
from riordan.matrix import ExactMatrix
from riordan.partial_sums import p_inverse_pair, row_partial_sum, row_ps_inverse_finite

from conftest import lower, random_hessenberg


@pytest.fixture
def h_pascal():
    return ExactMatrix(G.PASCAL_H_FINITE_6)


@pytest.fixture
def h_example():
    return ExactMatrix(G.EXAMPLE_H_FINITE_6)


def test_hessenberg_type():
    h = HessenbergMatrix(ExactMatrix([[1, 2, 0], [3, 4, 5], [6, 7, 8]]))
    assert h.alphas == [2, 5]
    assert h.h(3, 1) == 6
    with pytest.raises(HessenbergError):
        HessenbergMatrix(ExactMatrix([[1, 2, 3], [3, 4, 5], [6, 7, 8]]))


def test_partition(h_pascal, h_example):
    part = partition(h_pascal)
    assert part.C == [2, -2, 2, -2, 2]
    assert part.corner == -1
    assert part.R == [5, -10, 10, -5, 1]
    assert part.assemble() == h_pascal
    two = partition(ExactMatrix([[3, 7], [5, 11]]))
    assert (two.C, two.corner, two.R) == ([3], 5, [11])
    assert two.P == ExactMatrix([[7]])
    part = partition(h_example)
    assert part.C == [4, -12, 30, -60, 102]
    assert part.corner == -63
    with pytest.raises(HessenbergError):
        partition(ExactMatrix([[1]]))


def test_x_vector(h_example):
    assert x_vector(h_example) == [1, 4, 12, 38, 128, 450]
    assert x_vector(ExactMatrix([[5]])) == [1]


def test_x_vector_bidiagonal():
    # superdiagonal -1, unit diagonal: every x_i is forced to 1
    h = ExactMatrix([[1 if i == j else (-1 if j == i + 1 else 0) for j in range(5)] for i in range(5)])
    xs = x_vector(h)
    assert xs == [1, 1, 1, 1, 1]
    # the first n-1 equations of H x = 0 hold
    assert all(sum(h[i, j] * xs[j] for j in range(5)) == 0 for i in range(4))


def test_zero_alpha_rejected():
    with pytest.raises(HessenbergError):
        x_vector(ExactMatrix([[1, 0], [1, 1]]))


def test_w_vector(h_example, h_pascal):
    assert w_vector(h_example) == [1] * 6
    assert w_vector(h_pascal) == [1] * 6


def test_w_vector_singular():
    with pytest.raises(SingularMatrixError):
        w_vector(ExactMatrix([[1, 1], [1, 1]]))


def test_zhong_inverse_examples(h_example, h_pascal, pascal):
    assert zhong_inverse(h_example) == ExactMatrix(G.EXAMPLE_ROW_PS_6)
    assert zhong_inverse(h_pascal) == row_partial_sum(pascal, 6)


def test_decomposition_assembly(h_example):
    d = decompose(h_example)
    assert d.x[0] == 1
    assert d.assemble() == h_example.inverse()


def test_det_relation(h_example):
    assert det_relation_check(h_example)
    assert det_relation_check(ExactMatrix([[7]]))
    rng = random.Random(6)
    for _ in range(10):
        assert det_relation_check(random_hessenberg(rng, 6))


@pytest.mark.parametrize("n", [4, 5])
def test_random_against_elimination(n):
    rng = random.Random(n)
    for _ in range(10):
        h = random_hessenberg(rng, n)
        assert zhong_inverse(h) == h.inverse()


def test_fractional_entries():
    h = ExactMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(2, 5), 1]])
    assert zhong_inverse(h) == h.inverse()


def test_p_block_identity(example, pascal, identity_pair):
    assert p_block_identity_check(example, 6)
    assert riordan_matrix(p_inverse_pair(example), 5) == lower(G.EXAMPLE_P_INVERSE_5)
    assert riordan_matrix(p_inverse_pair(example), 5).inverse() == lower(G.EXAMPLE_P_5)
    assert p_block_identity_check(pascal, 6)
    assert p_block_identity_check(identity_pair, 4)


def test_finite_h_of_random_pairs_has_unit_w():
    from conftest import random_pair

    rng = random.Random(99)
    for _ in range(5):
        p = random_pair(rng, 10)
        h = row_ps_inverse_finite(p, 8)
        assert w_vector(h) == [1] * 8
        assert x_vector(h) == riordan_matrix(p, 8).row_sums()
