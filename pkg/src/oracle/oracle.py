"""
Graded Frobenius characters computed directly from the presentations.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Union

from config import ORACLE_MAX_MONOMIALS
from src.combinat.partitions import Partition, class_representative, partitions_of, z_of
from src.frobchar.characters import IdentityFailure, ch_T_from_OT
from src.oracle.algebra import PresentedAlgebra, Variant
from src.oracle.pieces import (
    GradedPiece,
    build_piece,
    rows_have_single_support,
    stability_residual,
    trace_on_quotient,
)
from src.qseries.series import QSeries
from src.symfunc.symmetric import Basis, SymFunc, is_schur_integral, is_schur_positive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassFunction:
    """Trace of each cycle type on one graded piece."""
    n: int
    values: Dict[Partition, Fraction]

    def to_symfunc(self) -> SymFunc:
        """Frobenius characteristic Σ_λ values(λ)/z_λ · p_λ."""
        terms = {lam: QSeries.constant(Fraction(v) / z_of(lam)) for lam, v in self.values.items() if v}
        return SymFunc._from_clean(self.n, Basis.P, terms)


def piece_class_function(piece: GradedPiece) -> ClassFunction:
    """Traces on the quotient piece for one representative of every cycle type."""
    n = piece.algebra.n
    values = {}
    for lam in partitions_of(n):
        sigma = class_representative(lam)
        residual = stability_residual(piece, sigma)
        if residual:
            raise IdentityFailure(
                f"{piece.algebra.variant.value}_{n} degree {piece.degree}: ideal is not stable under {tuple(lam)}"
            )
        values[lam] = trace_on_quotient(piece, sigma)
    return ClassFunction(n=n, values=values)


def oracle_character(
    variant: Union[Variant, str],
    n: int,
    max_degree: int,
    max_monomials: int = ORACLE_MAX_MONOMIALS,
) -> SymFunc:
    """
    Graded character of OT_n, C_n, D_n or M_n up to q^{max_degree}.

    Args:
        variant: Algebra (Variant or its name)
        n: Number of points
        max_degree: Highest q-degree computed; the result has order max_degree+1
        max_monomials: Ceiling passed to build_piece

    Returns:
        The character in the p-basis

    Raises:
        TooLarge: If some piece exceeds the ceiling
        IdentityFailure: If the ideal is not permutation stable, a support
            check fails, or the result is not a genuine character
    """
    variant = variant if isinstance(variant, Variant) else Variant.parse(variant)
    if max_degree < 0:
        raise ValueError(f"max_degree must be nonnegative, got {max_degree}")
    alg = PresentedAlgebra(n=n, variant=variant)
    order = max_degree + 1
    graded: Dict[Partition, List[Fraction]] = {}
    for d in range(order):
        piece = build_piece(alg, d, max_monomials)
        if variant in (Variant.OT, Variant.C) and not rows_have_single_support(piece):
            raise IdentityFailure(f"{variant.value}_{n} degree {d}: reduced ideal vector mixes supports")
        if piece.dimension == 0:
            continue
        for lam, c in piece_class_function(piece).to_symfunc().terms.items():
            graded.setdefault(lam, [0] * order)[d] = c.constant_term
    terms = {lam: QSeries(coeffs, order) for lam, coeffs in graded.items()}
    result = SymFunc._from_clean(n, Basis.P, terms)
    if not (is_schur_positive(result) and is_schur_integral(result)):
        raise IdentityFailure(f"Oracle character of {variant.value}_{n} is not a nonnegative integral Schur combination")
    logger.info(f"Oracle character of {variant.value}_{n} computed through q^{max_degree}")
    return result


def oracle_T(n: int, max_degree: int, max_monomials: int = ORACLE_MAX_MONOMIALS) -> SymFunc:
    """ch_{T_n} from the oracle's OT_k characters, k <= n, by the support decomposition."""
    ot_by_k = [oracle_character(Variant.OT, k, max_degree, max_monomials) for k in range(1, n + 1)]
    return ch_T_from_OT(n, max_degree + 1, ot_by_k)
