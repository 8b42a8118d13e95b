#!/usr/bin/env python3

import pytest

from src.combinat.partitions import Partition, class_representative
from src.frobchar.characters import ch_C, ch_D, ch_M, ch_OT, ch_T
from src.oracle.algebra import PresentedAlgebra, TooLarge, Variant
from src.oracle.oracle import oracle_character, oracle_T, piece_class_function
from src.oracle.pieces import (
    build_piece,
    monomial_count,
    rows_have_single_support,
    stability_residual,
    trace_on_monomials,
    trace_on_quotient,
)
from src.symfunc.symmetric import schur_terms


def schur(f):
    return {(k, tuple(lam)): c for k, lam, c in schur_terms(f)}


TRANSPOSITION = class_representative(Partition((2, 1)))
THREE_CYCLE = class_representative(Partition((3,)))
IDENTITY = class_representative(Partition((1, 1, 1)))


def test_presentations():
    ot = PresentedAlgebra(3, Variant.OT)
    assert ot.generators == [(0, 1), (0, 2), (1, 2)]
    assert len(ot.quadratic_relations) == 1
    assert ot.linear_relations == []
    assert len(PresentedAlgebra(3, Variant.C).quadratic_relations) == 4
    assert len(PresentedAlgebra(3, Variant.D).linear_relations) == 3
    assert ot.signed(2, 0) == (1, -1)


def test_variant_parse():
    assert Variant.parse("ot") == Variant.OT
    assert Variant.parse("D") == Variant.D
    with pytest.raises(ValueError):
        Variant.parse("x")


def test_piece_dimensions():
    c3 = PresentedAlgebra(3, Variant.C)
    assert build_piece(c3, 0).dimension == 1
    assert build_piece(c3, 1).dimension == 3
    assert build_piece(c3, 2).dimension == 2
    assert build_piece(c3, 3).dimension == 0
    assert build_piece(PresentedAlgebra(3, Variant.OT), 2).dimension == 5
    d3 = PresentedAlgebra(3, Variant.D)
    assert build_piece(d3, 1).dimension == 1
    assert build_piece(d3, 2).dimension == 0


def test_traces_on_d3_degree_one():
    piece = build_piece(PresentedAlgebra(3, Variant.D), 1)
    assert trace_on_quotient(piece, IDENTITY) == 1
    assert trace_on_quotient(piece, TRANSPOSITION) == -1
    assert trace_on_quotient(piece, THREE_CYCLE) == 1


def test_traces_on_monomials():
    piece = build_piece(PresentedAlgebra(3, Variant.OT), 1)
    assert trace_on_monomials(piece, IDENTITY) == 3
    # (0 1) fixes e_01 up to sign and swaps e_02 with e_12
    assert trace_on_monomials(piece, TRANSPOSITION) == -1
    assert trace_on_monomials(piece, THREE_CYCLE) == 0


def test_ideal_is_stable_and_support_homogeneous():
    piece = build_piece(PresentedAlgebra(4, Variant.C), 2)
    for sigma in (class_representative(Partition((2, 1, 1))), class_representative(Partition((4,)))):
        assert not stability_residual(piece, sigma)
    assert rows_have_single_support(piece)
    # dim C_4 = (1+q)(1+2q)(1+3q)
    assert piece.dimension == 11
    assert piece_class_function(piece).values[Partition((1, 1, 1, 1))] == 11


def test_monomial_ceiling():
    assert monomial_count(6, 3) == 56
    assert monomial_count(0, 0) == 1
    with pytest.raises(TooLarge):
        build_piece(PresentedAlgebra(4, Variant.OT), 3, max_monomials=10)
    with pytest.raises(TooLarge):
        oracle_character(Variant.OT, 4, 3, max_monomials=10)


def test_oracle_matches_D3():
    value = oracle_character(Variant.D, 3, 1)
    assert value.order == 2
    assert schur(value) == {(0, (3,)): 1, (1, (1, 1, 1)): 1}


def test_oracle_matches_C3_through_vanishing_degree():
    value = oracle_character("c", 3, 3)
    assert value.agrees_with(ch_C(3).truncate(4))


def test_oracle_OT2_alternates():
    value = oracle_character(Variant.OT, 2, 3)
    assert schur(value) == {(0, (2,)): 1, (1, (1, 1)): 1, (2, (2,)): 1, (3, (1, 1)): 1}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_oracle_against_formulas(n):
    assert oracle_character(Variant.D, n, n - 1).agrees_with(ch_D(n).truncate(n))
    assert oracle_character(Variant.M, n, n - 1).agrees_with(ch_M(n, n + 1).truncate(n))
    assert oracle_character(Variant.OT, n, 3).agrees_with(ch_OT(n, 4))


def test_oracle_T3():
    assert oracle_T(3, 3).agrees_with(ch_T(3, 4))
