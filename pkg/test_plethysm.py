#!/usr/bin/env python3

import numpy as np
import pytest

from src.combinat.partitions import partitions_of
from src.frobchar.characters import lyndon
from src.qseries.series import QSeries, one_minus_q
from src.symfunc.family import GradedFamily, plethystic_exp, sum_over_partitions
from src.symfunc.plethysm import (
    InnerDegreeZero,
    complete_plethysms,
    elementary_plethysms,
    plethysm,
    power_plethysm,
)
from src.symfunc.symmetric import Basis, SymFunc, h, p, s, schur_terms


def schur(f):
    return {(k, tuple(lam)): c for k, lam, c in schur_terms(f)}


def test_classical_plethysms():
    assert schur(plethysm(h(2), h(2))) == {(0, (4,)): 1, (0, (2, 2)): 1}
    assert schur(plethysm(s(1, 1), h(2))) == {(0, (3, 1)): 1}
    assert schur(plethysm(h(3), s(1))) == {(0, (3,)): 1}


def test_newton_plethysms_agree_with_direct_plethysm():
    complete = complete_plethysms(2, h(2))
    elementary = elementary_plethysms(2, h(2))
    assert len(complete) == 3
    assert complete[0] == SymFunc.one()
    assert complete[2] == plethysm(h(2), h(2))
    assert elementary[2] == plethysm(s(1, 1), h(2))
    assert complete_plethysms(3, s(1, 1))[3] == plethysm(h(3), s(1, 1))


def test_power_plethysm_substitutes_q_power():
    g = s(1).scale(QSeries.monomial(1))
    result = power_plethysm(2, g)
    assert result == p(2).scale(QSeries.monomial(2))


def test_inner_q_series_coefficients():
    # h_2[(1-q)X] = h_2 - q h_1 e_1 + q^2 e_2
    result = plethysm(h(2), s(1).scale(one_minus_q()))
    assert schur(result) == {(0, (2,)): 1, (1, (2,)): -1, (1, (1, 1)): -1, (2, (1, 1)): 1}


def test_degenerate_inner_functions():
    with pytest.raises(InnerDegreeZero):
        plethysm(h(2), SymFunc.one())
    assert plethysm(h(2), SymFunc.zero(3)).is_zero()
    assert plethysm(h(2), SymFunc.zero(3)).degree == 6


def test_sum_over_partitions_visits_every_partition_once():
    total = sum_over_partitions(4, lambda j, m: p(*([j] * m)))
    assert set(total.terms) == set(partitions_of(4))
    assert all(c == 1 for _, c in total)


def test_sum_over_partitions_skips_none_factors():
    total = sum_over_partitions(4, lambda j, m: None if j == 2 else p(*([j] * m)))
    assert sorted(tuple(lam) for lam in total.terms) == [(1, 1, 1, 1), (3, 1), (4,)]


def test_plethystic_exp_of_single_variable():
    family = GradedFamily((s(1), SymFunc.zero(2), SymFunc.zero(3)))
    components = plethystic_exp(family).components
    assert [schur(c) for c in components] == [{(0, (1,)): 1}, {(0, (2,)): 1}, {(0, (3,)): 1}]


def test_plethystic_exp_matches_sum_of_complete_plethysms():
    # Exp(p_1 + h_2) - 1, degree 4 component: Σ_{a+2b=4} h_a·h_b[h_2]
    family = GradedFamily((s(1), h(2), SymFunc.zero(3), SymFunc.zero(4)))
    exp4 = plethystic_exp(family).component(4)
    inner = complete_plethysms(2, h(2))
    expected = h(4) + h(2) * inner[1] + inner[2]
    assert exp4 == expected.to_power()


def test_graded_family_rejects_wrong_degrees():
    with pytest.raises(ValueError):
        GradedFamily((s(2),))


def random_symfunc(rng, degree, basis):
    terms = {}
    for lam in partitions_of(degree):
        coeff = QSeries([int(c) for c in rng.integers(-2, 3, size=2)])
        if not coeff.is_zero():
            terms[lam] = coeff
    if not terms:
        terms[partitions_of(degree)[0]] = QSeries.one()
    return SymFunc(degree, basis, terms)


def test_plethysm_is_multiplicative_and_additive_in_the_outer_argument():
    rng = np.random.default_rng(11)
    for _ in range(8):
        f1 = random_symfunc(rng, int(rng.integers(1, 3)), Basis.S)
        f2 = random_symfunc(rng, int(rng.integers(1, 3)), Basis.H)
        f3 = random_symfunc(rng, f1.degree, Basis.P)
        g = random_symfunc(rng, int(rng.integers(1, 3)), Basis.S)
        assert plethysm(f1 * f2, g) == plethysm(f1, g) * plethysm(f2, g)
        assert plethysm(f1 + f3, g) == plethysm(f1, g) + plethysm(f3, g)


def test_plethystic_exp_of_minus_q_lyndon():
    # Exp(-qL) = 1 - q·p_1 with L = Σ q^{n-1} l_n
    family = GradedFamily.from_function(6, lambda n: lyndon(n).scale(QSeries.monomial(n, -1)))
    components = plethystic_exp(family).components
    assert components[0] == p(1).scale(QSeries.monomial(1, -1))
    assert all(c.is_zero() for c in components[1:])
