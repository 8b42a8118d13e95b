"""
Graded pieces of a presented algebra and traces of permutations on them.
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, FrozenSet, List, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from config import ORACLE_MAX_MONOMIALS
from src.oracle.algebra import Monomial, PresentedAlgebra, TooLarge

logger = logging.getLogger(__name__)

Row = Dict[int, Fraction]


@dataclass(frozen=True)
class GradedPiece:
    """
    Degree-d piece of the polynomial ring and of the relation ideal.

    ``ideal_rows`` is the reduced row echelon basis of the ideal's degree-d
    part in monomial coordinates; row i has a 1 in column ``pivots[i]`` and 0
    in every other pivot column.
    """
    algebra: PresentedAlgebra
    degree: int
    monomials: Tuple[Monomial, ...]
    column: Dict[Monomial, int]
    ideal_rows: Tuple[Row, ...]
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def dimension(self) -> int:
        """Dimension of the quotient piece."""
        return len(self.monomials) - self.rank


def monomial_count(generators: int, degree: int) -> int:
    if generators == 0:
        return 1 if degree == 0 else 0
    return comb(generators + degree - 1, degree)


def _multiply(mono: Monomial, poly: Dict[Monomial, int]) -> Dict[Monomial, int]:
    return {tuple(sorted(mono + m)): c for m, c in poly.items()}


def build_piece(alg: PresentedAlgebra, d: int, max_monomials: int = ORACLE_MAX_MONOMIALS) -> GradedPiece:
    """
    Build the degree-d piece of ``alg``.

    The ideal is spanned by (degree d-2 monomial)·(quadratic relation) and
    (degree d-1 monomial)·(linear relation); the span is row-reduced exactly.

    Args:
        alg: Presented algebra
        d: Degree, d >= 0
        max_monomials: Ceiling on the number of degree-d monomials

    Returns:
        GradedPiece

    Raises:
        TooLarge: If there are more than ``max_monomials`` monomials
    """
    if d < 0:
        raise ValueError(f"Degree must be nonnegative, got {d}")
    size = monomial_count(len(alg.generators), d)
    if size > max_monomials:
        raise TooLarge(
            f"{alg.variant.value}_{alg.n} degree {d} has {size} monomials, above the ceiling {max_monomials}"
        )
    start = time.perf_counter()
    monomials = tuple(combinations_with_replacement(range(len(alg.generators)), d))
    column = {mono: k for k, mono in enumerate(monomials)}

    spanning: List[Dict[int, int]] = []
    for relations, rel_degree in ((alg.quadratic_relations, 2), (alg.linear_relations, 1)):
        if d < rel_degree or not relations:
            continue
        for mono in combinations_with_replacement(range(len(alg.generators)), d - rel_degree):
            for relation in relations:
                row: Dict[int, int] = {}
                for product, c in _multiply(mono, relation).items():
                    k = column[product]
                    row[k] = row.get(k, 0) + c
                row = {k: c for k, c in row.items() if c}
                if row:
                    spanning.append(row)

    rows: Tuple[Row, ...] = ()
    pivots: Tuple[int, ...] = ()
    if spanning:
        dod = {i: {k: ZZ(c) for k, c in row.items()} for i, row in enumerate(spanning)}
        matrix = DomainMatrix(dod, (len(spanning), len(monomials)), ZZ)
        reduced, pivots = matrix.rref()
        reduced_dod = reduced.to_dod()
        rows = tuple(
            {k: Fraction(int(x.numerator), int(x.denominator)) for k, x in reduced_dod.get(i, {}).items()}
            for i in range(len(pivots))
        )
        pivots = tuple(int(p) for p in pivots)

    elapsed = (time.perf_counter() - start) * 1000
    logger.info(
        f"{alg.variant.value}_{alg.n} degree {d}: {len(monomials)} monomials, "
        f"{len(spanning)} spanning products, ideal rank {len(pivots)} ({elapsed:.1f} ms)"
    )
    return GradedPiece(
        algebra=alg, degree=d, monomials=monomials, column=column, ideal_rows=rows, pivots=pivots
    )


class MonomialAction:
    """Signed permutation of the monomial basis induced by a point permutation."""

    def __init__(self, piece: GradedPiece, sigma: Tuple[int, ...]):
        self.piece = piece
        self.generator_images = piece.algebra.act(sigma)

    def image(self, k: int) -> Tuple[int, int]:
        """(column, sign) of sigma applied to monomial k."""
        sign = 1
        parts = []
        for g in self.piece.monomials[k]:
            target, s = self.generator_images[g]
            parts.append(target)
            sign *= s
        return self.piece.column[tuple(sorted(parts))], sign

    def apply(self, row: Row) -> Row:
        result: Row = {}
        for k, c in row.items():
            target, sign = self.image(k)
            result[target] = result.get(target, 0) + sign * c
        return {k: c for k, c in result.items() if c}


def _inverse(sigma: Tuple[int, ...]) -> Tuple[int, ...]:
    inverse = [0] * len(sigma)
    for i, image in enumerate(sigma):
        inverse[image] = i
    return tuple(inverse)


def trace_on_monomials(piece: GradedPiece, sigma: Tuple[int, ...]) -> int:
    action = MonomialAction(piece, sigma)
    total = 0
    for k in range(len(piece.monomials)):
        target, sign = action.image(k)
        if target == k:
            total += sign
    return total


def trace_on_ideal(piece: GradedPiece, sigma: Tuple[int, ...]) -> Fraction:
    """
    Trace of sigma on the ideal subspace.

    With the reduced basis r_i, sigma·r_i = Σ_j (sigma·r_i)[pivot_j] r_j, so
    the trace is Σ_i (sigma·r_i)[pivot_i]. Only the preimage of each pivot
    column is needed.
    """
    if not piece.pivots:
        return Fraction(0)
    inverse = MonomialAction(piece, _inverse(sigma))
    forward = MonomialAction(piece, sigma)
    total = Fraction(0)
    for row, pivot in zip(piece.ideal_rows, piece.pivots):
        source, _ = inverse.image(pivot)
        coeff = row.get(source)
        if coeff:
            _, sign = forward.image(source)
            total += sign * coeff
    return total


def trace_on_quotient(piece: GradedPiece, sigma: Tuple[int, ...]) -> Fraction:
    """tr(sigma on monomials) - tr(sigma on the ideal subspace)."""
    return trace_on_monomials(piece, sigma) - trace_on_ideal(piece, sigma)


def stability_residual(piece: GradedPiece, sigma: Tuple[int, ...]) -> Row:
    """
    First nonzero residual of sigma·r_i after projecting back onto the ideal.

    Returns an empty dict when sigma maps the ideal subspace into itself.
    """
    action = MonomialAction(piece, sigma)
    for row in piece.ideal_rows:
        image = action.apply(row)
        residual = dict(image)
        for basis_row, pivot in zip(piece.ideal_rows, piece.pivots):
            c = image.get(pivot)
            if not c:
                continue
            for k, x in basis_row.items():
                residual[k] = residual.get(k, 0) - c * x
        residual = {k: c for k, c in residual.items() if c}
        if residual:
            return residual
    return {}


def monomial_support(piece: GradedPiece, k: int) -> FrozenSet[FrozenSet[int]]:
    """Finest set partition of the points in which every factor of monomial k lies in one block."""
    parent = list(range(piece.algebra.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in piece.monomials[k]:
        i, j = piece.algebra.generators[g]
        parent[find(i)] = find(j)
    blocks: Dict[int, set] = {}
    for point in range(piece.algebra.n):
        blocks.setdefault(find(point), set()).add(point)
    return frozenset(frozenset(block) for block in blocks.values())


def rows_have_single_support(piece: GradedPiece) -> bool:
    """True when every reduced ideal vector involves monomials of one support only."""
    for row in piece.ideal_rows:
        supports = {monomial_support(piece, k) for k in row}
        if len(supports) > 1:
            return False
    return True
