#!/usr/bin/env python3

import pytest

from src.frobchar.characters import (
    ch_C,
    ch_D,
    ch_D_alt,
    ch_D_polynomial_form,
    ch_lambda,
    ch_lambda_primed,
    ch_lambdaP_primed,
    ch_M,
    ch_OT,
    ch_R,
    ch_R_schur,
    ch_T,
    ch_T_from_OT,
    gen_fun_D,
    gen_fun_OT,
    lyndon,
    named_character,
    top_degree_coefficient,
)
from src.qseries.series import NotPolynomial, QSeries, product_of_polynomials
from src.symfunc.symmetric import hilbert, is_schur_integral, is_schur_positive, kronecker, s, schur_terms


def schur(f):
    return {(k, tuple(lam)): c for k, lam, c in schur_terms(f)}


def dimension_product(count):
    return product_of_polynomials([QSeries((1, i)) for i in range(1, count + 1)])


def test_lyndon():
    assert schur(lyndon(1)) == {(0, (1,)): 1}
    assert schur(lyndon(2)) == {(0, (1, 1)): 1}
    assert schur(lyndon(3)) == {(0, (2, 1)): 1}
    assert schur(lyndon(4)) == {(0, (3, 1)): 1, (0, (2, 1, 1)): 1}
    assert hilbert(lyndon(5)) == 24


def test_exterior_algebras():
    assert schur(ch_lambda(3)) == {(0, (3,)): 1, (1, (2, 1)): 1, (2, (1, 1, 1)): 1}
    assert schur(ch_lambda_primed(3)) == {(0, (3,)): 1, (1, (2, 1)): -1, (2, (1, 1, 1)): 1}
    assert schur(ch_lambdaP_primed(2)) == {(0, (2,)): 1, (1, (2,)): -1, (1, (1, 1)): -1, (2, (1, 1)): 1}


def test_ch_C_small_cases():
    assert schur(ch_C(1)) == {(0, (1,)): 1}
    assert schur(ch_C(2)) == {(0, (2,)): 1, (1, (1, 1)): 1}
    assert schur(ch_C(3)) == {
        (0, (3,)): 1,
        (1, (2, 1)): 1,
        (1, (1, 1, 1)): 1,
        (2, (2, 1)): 1,
    }


def test_ch_D_small_cases():
    assert schur(ch_D(1)) == {(0, (1,)): 1}
    assert schur(ch_D(2)) == {(0, (2,)): 1}
    assert schur(ch_D(3)) == {(0, (3,)): 1, (1, (1, 1, 1)): 1}
    assert ch_D(3).order is None


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_graded_dimensions(n):
    assert hilbert(ch_C(n)) == dimension_product(n - 1)
    assert hilbert(ch_D(n)) == dimension_product(n - 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_three_formulas_for_D_agree(n):
    reference = schur(ch_D(n))
    assert schur(ch_D_alt(n)) == reference
    assert schur(ch_D_polynomial_form(n)) == reference


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_top_degree_vanishes(n):
    assert top_degree_coefficient(n).is_zero()


def test_ch_R_two_ways():
    assert ch_R(3, 6).agrees_with(ch_R_schur(3, 6))
    assert schur(ch_R(2, 4)) == {(0, (2,)): 1, (1, (1, 1)): 1, (2, (2,)): 1, (3, (1, 1)): 1}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_koszul_cancellation(n):
    assert kronecker(ch_R(n, 2 * n), ch_lambda_primed(n)).agrees_with(s(n))


def test_ch_OT_n2():
    value = ch_OT(2, 4)
    assert value.order == 4
    assert schur(value) == {(0, (2,)): 1, (1, (1, 1)): 1, (2, (2,)): 1, (3, (1, 1)): 1}


def test_ch_OT_is_a_genuine_character():
    value = ch_OT(4, 4)
    assert is_schur_positive(value)
    assert is_schur_integral(value)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_ch_D_equals_ch_M(n):
    assert schur(ch_M(n, n + 1)) == schur(ch_D(n))


def test_ch_M_needs_enough_terms():
    with pytest.raises(NotPolynomial):
        ch_M(3, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ot_factorization(n):
    order = 2 * n
    assert ch_OT(n, order).agrees_with(kronecker(ch_M(n, order), ch_R(n, order)))


def test_ch_T():
    assert schur(ch_T(1, 3)) == {(0, (1,)): 1}
    assert schur(ch_T(2, 4)) == {(1, (1, 1)): 1, (2, (2,)): 1, (3, (1, 1)): 1}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ch_T_from_support_recursion(n):
    order = n + 2
    ot_by_k = [ch_OT(k, order) for k in range(1, n + 1)]
    assert ch_T_from_OT(n, order, ot_by_k).agrees_with(ch_T(n, order))


def test_generating_functions():
    d_family = gen_fun_D(4, 5)
    assert [schur(c) for c in d_family.components] == [schur(ch_D(n)) for n in range(1, 5)]
    ot_family = gen_fun_OT(3, 4)
    for n in range(1, 4):
        assert ot_family.component(n).agrees_with(ch_OT(n, 4))


def test_named_character():
    exact = named_character("D", 3)
    assert exact.truncation is None
    assert schur(exact.value) == {(0, (3,)): 1, (1, (1, 1, 1)): 1}
    series = named_character("OT", 2)
    assert series.truncation == 3
    assert named_character("T", 3, 5).truncation == 5
    with pytest.raises(ValueError):
        named_character("X", 3)


def test_invalid_degree():
    with pytest.raises(ValueError):
        ch_C(0)
    with pytest.raises(ValueError):
        ch_OT(2, 0)
