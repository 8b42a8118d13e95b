"""
Specializations of the alphabet X/(1-q) = X + qX + q²X + ...
"""

import logging
from fractions import Fraction
from typing import Dict

from src.combinat.partitions import Partition, partitions_of, z_of
from src.qseries.series import QSeries, product_of_polynomials, qs_invert, qs_mul
from src.symfunc.symmetric import Basis, SymFunc

logger = logging.getLogger(__name__)


def inverse_one_minus_q_power(k: int, order: int) -> QSeries:
    """1/(1-q^k) truncated at ``order``."""
    if k < 1:
        raise ValueError(f"Need k >= 1, got {k}")
    if order < 1:
        raise ValueError(f"Truncation order must be positive, got {order}")
    return QSeries([1 if i % k == 0 else 0 for i in range(order)], order)


def power_sum_over_geometric(lam: Partition, order: int) -> QSeries:
    """p_λ[X/(1-q)] / p_λ = Π_i 1/(1-q^{λ_i})."""
    result = QSeries.one(order)
    for part in lam:
        result = qs_mul(result, inverse_one_minus_q_power(part, order))
    return result


def complete_over_geometric(n: int, order: int) -> SymFunc:
    """
    h_n[X/(1-q)] = Σ_{μ⊢n} (1/z_μ) Π_i 1/(1-q^{μ_i}) p_μ.

    This is the graded character of the polynomial ring on the permutation
    representation of S_n.
    """
    if n < 0:
        raise ValueError(f"Degree must be nonnegative, got {n}")
    terms: Dict[Partition, QSeries] = {}
    for mu in partitions_of(n):
        terms[mu] = power_sum_over_geometric(mu, order).scale(Fraction(1, z_of(mu)))
    return SymFunc._from_clean(n, Basis.P, terms)


def principal_specialization(lam: Partition, order: int) -> QSeries:
    """s_λ(1, q, q², ...) = q^{b(λ)} / Π_{cells} (1 - q^{hook})."""
    denominator = product_of_polynomials(
        [QSeries.monomial(0, 1) - QSeries.monomial(hook, 1) for hook in lam.hook_lengths()]
    )
    return qs_invert(denominator, order).shift(lam.weighted_size()).truncate(order)
