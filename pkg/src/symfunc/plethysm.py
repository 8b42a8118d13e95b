"""
Plethysm f[g] on homogeneous symmetric functions.

Outer coefficients are scalars. Inside p_k[g] every p_j becomes p_{jk} and
every q becomes q^k, so p_k[q·p_1] = q^k·p_k.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from src.combinat.partitions import Partition
from src.qseries.series import PowerQ, QSeries, qs_mul, qs_substitute
from src.symfunc.symmetric import Basis, SymFunc, to_power

logger = logging.getLogger(__name__)


class InnerDegreeZero(ValueError):
    """Raised for f[g] with g a nonzero constant."""


def power_plethysm(k: int, g: SymFunc) -> SymFunc:
    """p_k[g], returned in the p-basis."""
    if k < 1:
        raise ValueError(f"power_plethysm needs k >= 1, got {k}")
    g = to_power(g)
    if k == 1:
        return g
    mode = PowerQ(k)
    terms = {lam.scale(k): qs_substitute(c, mode) for lam, c in g.terms.items()}
    return SymFunc._from_clean(k * g.degree, Basis.P, terms)


def _accumulate(target: Dict[Partition, List[QSeries]], f: SymFunc, coeff: QSeries) -> None:
    for lam, c in f.terms.items():
        target.setdefault(lam, []).append(qs_mul(coeff, c))


def _collect(degree: int, pending: Dict[Partition, List[QSeries]]) -> SymFunc:
    terms = {}
    for lam, items in pending.items():
        total = items[0]
        for item in items[1:]:
            total = total + item
        terms[lam] = total
    return SymFunc._from_clean(degree, Basis.P, terms)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """
    Compute f[g].

    f is expanded in the p-basis, f = Σ_λ c_λ(q) p_λ, and
    f[g] = Σ_λ c_λ(q) Π_i p_{λ_i}[g]. Products over shared prefixes of λ are
    computed once.

    Args:
        f: Outer function
        g: Inner function of positive degree, or zero

    Returns:
        f[g] in the p-basis, of degree deg f · deg g

    Raises:
        InnerDegreeZero: If g is a nonzero constant
    """
    if g.degree == 0:
        if not g.is_zero():
            raise InnerDegreeZero("Plethysm with a nonzero constant inner function is not defined here")
        return f if f.degree == 0 else SymFunc.zero(0)
    f = to_power(f)
    degree = f.degree * g.degree
    if g.is_zero():
        return SymFunc.zero(degree)

    powers: Dict[int, SymFunc] = {}
    prefixes: Dict[Tuple[int, ...], SymFunc] = {(): SymFunc.one()}

    def prefix_product(parts: Tuple[int, ...]) -> SymFunc:
        known = prefixes.get(parts)
        if known is not None:
            return known
        head = prefix_product(parts[:-1])
        k = parts[-1]
        if k not in powers:
            powers[k] = power_plethysm(k, g)
        value = head * powers[k]
        prefixes[parts] = value
        return value

    pending: Dict[Partition, List[QSeries]] = {}
    for lam, coeff in sorted(f.terms.items()):
        _accumulate(pending, prefix_product(tuple(lam)), coeff)
    return _collect(degree, pending)


def complete_plethysms(m: int, g: SymFunc) -> List[SymFunc]:
    """
    [h_0[g], h_1[g], ..., h_m[g]] from k·h_k[g] = Σ_{i=1}^k p_i[g]·h_{k-i}[g].
    """
    return _newton_plethysms(m, g, signed=False)


def elementary_plethysms(m: int, g: SymFunc) -> List[SymFunc]:
    """[e_0[g], ..., e_m[g]] from k·e_k[g] = Σ_{i=1}^k (-1)^{i-1} p_i[g]·e_{k-i}[g]."""
    return _newton_plethysms(m, g, signed=True)


def _newton_plethysms(m: int, g: SymFunc, signed: bool) -> List[SymFunc]:
    if m < 0:
        raise ValueError(f"Plethysm index must be nonnegative, got {m}")
    if g.degree == 0 and not g.is_zero():
        raise InnerDegreeZero("Plethysm with a nonzero constant inner function is not defined here")
    d = g.degree
    results: List[SymFunc] = [SymFunc.one()]
    powers: List[SymFunc] = [SymFunc.one()]
    for k in range(1, m + 1):
        powers.append(power_plethysm(k, g) if d else SymFunc.zero(0))
        pending: Dict[Partition, List[QSeries]] = {}
        for i in range(1, k + 1):
            sign = -1 if signed and i % 2 == 0 else 1
            _accumulate(pending, powers[i] * results[k - i], QSeries.constant(Fraction(sign, k)))
        results.append(_collect(k * d, pending))
    return results
