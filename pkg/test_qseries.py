#!/usr/bin/env python3

from fractions import Fraction

import numpy as np
import pytest

from src.qseries.series import (
    NegateQ,
    NotPolynomial,
    PowerQ,
    QSeries,
    ZeroConstantTerm,
    geometric,
    one_minus_q,
    qs_exact_polynomial,
    qs_invert,
    qs_linear_combination,
    product_of_polynomials,
)


def test_trailing_zeros_are_trimmed_and_order_kept():
    a = QSeries([1, 2, 0, 0], order=6)
    assert a.coeffs == (1, 2)
    assert a.order == 6
    assert a[4] == 0
    with pytest.raises(IndexError):
        a[6]


def test_sum_and_product_take_the_smaller_order():
    a = QSeries([1, 1], order=3)
    b = QSeries([1, 2, 3, 4], order=5)
    assert (a + b) == QSeries([2, 3, 3], order=3)
    assert (a * b) == QSeries([1, 3, 5], order=3)
    exact = QSeries([1, 1])
    assert (exact * exact) == QSeries([1, 2, 1])


def test_geometric_inverse():
    g = geometric(5)
    assert g == QSeries([1, 1, 1, 1, 1], order=5)
    assert qs_invert(g) == one_minus_q(5)
    assert qs_invert(QSeries.constant(4)) == QSeries.constant(Fraction(1, 4))
    with pytest.raises(ZeroConstantTerm):
        qs_invert(QSeries.monomial(1, 1, 3))
    with pytest.raises(ValueError):
        qs_invert(one_minus_q())


def test_shift_raises_the_order():
    a = QSeries([1, 2], order=3).shift(2)
    assert a == QSeries([0, 0, 1, 2], order=5)


def test_substitutions():
    a = QSeries([1, 1, 1], order=4)
    assert a.substitute(NegateQ()) == QSeries([1, -1, 1], order=4)
    assert a.substitute(PowerQ(2)) == QSeries([1, 0, 1], order=4)
    assert QSeries([1, 1]).substitute(PowerQ(3)) == QSeries([1, 0, 0, 1])


def test_exact_polynomial_certification():
    numerator = one_minus_q() * QSeries([1, 2])
    quotient = (numerator * geometric(5)).truncate(5)
    assert qs_exact_polynomial(quotient, 1) == QSeries([1, 2])
    with pytest.raises(NotPolynomial):
        qs_exact_polynomial(QSeries([1, 1], order=2), 2)
    with pytest.raises(NotPolynomial):
        qs_exact_polynomial(geometric(4), 2)


def test_linear_combination():
    combo = qs_linear_combination([(2, QSeries([1, 1])), (-1, QSeries([0, 2], order=3))])
    assert combo == QSeries([2], order=3)
    assert qs_linear_combination([]) is None


def test_product_and_evaluation():
    product = product_of_polynomials([QSeries((1, i)) for i in range(1, 4)])
    assert product == QSeries([1, 6, 11, 6])
    assert product.evaluate_at_one() == 24
    with pytest.raises(NotPolynomial):
        geometric(3).evaluate_at_one()


def test_to_str():
    assert QSeries([1, -1, 0, 2]).to_str() == "1 - q + 2*q^3"
    assert QSeries([0, Fraction(1, 2)], order=3).to_str() == "1/2*q + O(q^3)"
    assert QSeries.zero().to_str() == "0"


def random_series(rng):
    size = int(rng.integers(0, 6))
    coeffs = [Fraction(int(a), int(b)) for a, b in zip(rng.integers(-5, 6, size=size), rng.integers(1, 4, size=size))]
    order = None if rng.integers(0, 2) == 0 else int(rng.integers(1, 9))
    return QSeries(coeffs, order)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def test_ring_axioms(rng):
    for _ in range(200):
        a, b, c = random_series(rng), random_series(rng), random_series(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("order", range(1, 65))
def test_inverse_of_one_minus_q(order):
    assert qs_invert(one_minus_q(order)) * one_minus_q(order) == QSeries.one(order)


@pytest.mark.parametrize("k", [2, 3, 5])
def test_power_substitution_is_a_ring_homomorphism(rng, k):
    mode = PowerQ(k)
    for _ in range(100):
        a, b = random_series(rng), random_series(rng)
        assert (a + b).substitute(mode) == a.substitute(mode) + b.substitute(mode)
        assert (a * b).substitute(mode) == a.substitute(mode) * b.substitute(mode)


def test_negation_is_an_involution(rng):
    for _ in range(100):
        a = random_series(rng)
        assert a.substitute(NegateQ()).substitute(NegateQ()) == a
