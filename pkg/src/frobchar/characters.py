"""
Graded Frobenius characters of C_n, D_n, OT_n, M_n, T_n, R_n and Λ_n.

Notation: l_n is the Lyndon symmetric function, ch' means q -> -q, and
ch_{Λ^•P_n} is the exterior algebra on the permutation representation.
Every character is returned in the p-basis; callers convert for display.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence

from src.combinat.partitions import Partition, divisors, moebius, partitions_of
from src.qseries.series import NotPolynomial, QSeries, one_minus_q, qs_invert
from src.symfunc.family import GradedFamily, plethystic_exp, sum_over_partitions
from src.symfunc.plethysm import complete_plethysms, plethysm
from src.symfunc.specialization import complete_over_geometric, principal_specialization
from src.symfunc.symmetric import Basis, SymFunc, e, h, kronecker, s

logger = logging.getLogger(__name__)


class IdentityFailure(AssertionError):
    """Raised when two independent evaluations of the same character disagree."""


def _require_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def _require_order(order: int) -> None:
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"max_q_degree must be a positive integer, got {order!r}")


def _q_power(k: int, c=1) -> QSeries:
    return QSeries.monomial(k, c)


def _assert_equal(name: str, lhs: SymFunc, rhs: SymFunc) -> None:
    if lhs != rhs:
        raise IdentityFailure(f"{name}: the two evaluations differ")


def _divide_by_one_minus_q(numerator: SymFunc, max_degree: int, order: int) -> SymFunc:
    """numerator/(1-q), certified to be a polynomial of degree <= max_degree."""
    inverse = qs_invert(one_minus_q(order))
    return numerator.scale(inverse).exact_polynomial(max_degree)


@lru_cache(maxsize=None)
def lyndon(n: int) -> SymFunc:
    """l_n = (1/n) Σ_{d|n} μ(d) p_d^{n/d}."""
    _require_n(n)
    terms: Dict[Partition, QSeries] = {}
    for d in divisors(n):
        mu = moebius(d)
        if mu:
            terms[Partition._make((d,) * (n // d))] = QSeries.constant(Fraction(mu, n))
    return SymFunc._from_clean(n, Basis.P, terms)


def _hook(n: int, i: int) -> SymFunc:
    return s(n - i, *([1] * i))


@lru_cache(maxsize=None)
def ch_lambda(n: int) -> SymFunc:
    """Exterior algebra on the standard representation: Σ_{i<n} q^i s_{(n-i,1^i)}."""
    _require_n(n)
    total = SymFunc.zero(n, Basis.S)
    for i in range(n):
        total = total + _hook(n, i).scale(_q_power(i))
    return total.to_power()


@lru_cache(maxsize=None)
def ch_lambda_primed(n: int) -> SymFunc:
    """ch'_{Λ_n}, the Kronecker inverse of ch_{R_n}."""
    return ch_lambda(n).negate_q()


@lru_cache(maxsize=None)
def ch_lambdaP_primed(n: int) -> SymFunc:
    """
    ch'_{Λ^•P_n} = Σ_{k=0}^n (-q)^k h_{n-k} e_k.

    Raises:
        IdentityFailure: If it differs from (1-q)·ch'_{Λ_n}
    """
    _require_n(n)
    total = SymFunc.zero(n)
    for k in range(n + 1):
        term = h(n - k) * e(k) if 0 < k < n else (h(n) if k == 0 else e(n))
        total = total + term.scale(_q_power(k, (-1) ** k))
    _assert_equal(f"ch'_LambdaP({n}) = (1-q) ch'_Lambda({n})", total, ch_lambda_primed(n).scale(one_minus_q()))
    return total


@lru_cache(maxsize=None)
def ch_sym_perm(n: int, order: int) -> SymFunc:
    """h_n[X/(1-q)], the polynomial ring on the permutation representation."""
    _require_n(n)
    _require_order(order)
    return complete_over_geometric(n, order)


@lru_cache(maxsize=None)
def ch_R(n: int, order: int) -> SymFunc:
    """Symmetric algebra on the standard representation, (1-q)·h_n[X/(1-q)]."""
    return ch_sym_perm(n, order).scale(one_minus_q(order))


@lru_cache(maxsize=None)
def ch_R_schur(n: int, order: int) -> SymFunc:
    """(1-q)·Σ_λ s_λ(1,q,q²,...)·s_λ, evaluated by the hook-content formula."""
    _require_n(n)
    _require_order(order)
    terms = {lam: principal_specialization(lam, order) for lam in partitions_of(n)}
    return SymFunc(n, Basis.S, terms).scale(one_minus_q(order)).to_power()


def _complete_table(inner: Callable[[int], SymFunc], n: int) -> Callable[[int, int], Optional[SymFunc]]:
    """factor(j, m) = h_m[inner(j)], with h_0..h_{n//j} computed together per j."""
    tables: Dict[int, List[SymFunc]] = {}

    def factor(j: int, m: int) -> Optional[SymFunc]:
        if j not in tables:
            tables[j] = complete_plethysms(n // j, inner(j))
        return tables[j][m]

    return factor


@lru_cache(maxsize=None)
def ch_C(n: int) -> SymFunc:
    """Σ_{λ⊢n} q^{n-ℓ(λ)} Π_j h_{m_j}[l_j], a polynomial of degree <= n-1."""
    _require_n(n)
    result = sum_over_partitions(n, _complete_table(lambda j: lyndon(j).scale(_q_power(j - 1)), n))
    return result.exact_polynomial(n - 1)


@lru_cache(maxsize=None)
def ch_D(n: int) -> SymFunc:
    """
    (1/(1-q)) Σ_{λ⊢n} Π_j h_{m_j}[q^{j-1}(1-q) l_j].

    The numerator is an exact polynomial; the quotient is certified to have
    degree <= n-2 (0 when n = 1) by expanding to order n+1.
    """
    _require_n(n)
    weight = lambda j: lyndon(j).scale(_q_power(j - 1) * one_minus_q())
    numerator = sum_over_partitions(n, _complete_table(weight, n))
    return _divide_by_one_minus_q(numerator, max(n - 2, 0), n + 1)


@lru_cache(maxsize=None)
def ch_D_alt(n: int, check: bool = True) -> SymFunc:
    """
    Σ_{λ⊢n} q^{n-ℓ(λ)}/(1-q) · Π_j ch'_{Λ^•P_{m_j}}[l_j].

    Raises:
        IdentityFailure: With ``check``, if the result differs from ch_D(n)
    """
    _require_n(n)

    def factor(j: int, m: int) -> SymFunc:
        return plethysm(ch_lambdaP_primed(m), lyndon(j)).shift((j - 1) * m)

    numerator = sum_over_partitions(n, factor)
    result = _divide_by_one_minus_q(numerator, max(n - 2, 0), n + 1)
    if check:
        _assert_equal(f"ch_D({n}) two formulas", result, ch_D(n))
    return result


@lru_cache(maxsize=None)
def _lambda_primed_plethysm(m: int, j: int) -> SymFunc:
    return plethysm(ch_lambda_primed(m), lyndon(j))


@lru_cache(maxsize=None)
def ch_D_polynomial_form(n: int) -> SymFunc:
    """
    Division-free form Σ_λ q^{n-ℓ(λ)} (1-q)^{c_λ-1} Π_j ch'_{Λ_{m_j}}[l_j].

    c_λ is the number of distinct parts. The nominal q-degree is n-1.
    """
    _require_n(n)
    total = SymFunc.zero(n)
    for lam in partitions_of(n):
        form = lam.exponential()
        term = SymFunc.one(_q_power(n - form.length) * one_minus_q() ** (form.support_count - 1))
        for j, m in form.multiplicities:
            term = term * _lambda_primed_plethysm(m, j)
        total = total + term
    return total


def top_degree_coefficient(n: int) -> SymFunc:
    """Coefficient of q^{n-1} in the division-free form; zero for n >= 2."""
    return ch_D_polynomial_form(n).q_coefficient(n - 1)


@lru_cache(maxsize=None)
def ch_OT(n: int, order: int) -> SymFunc:
    """Σ_{λ⊢n} q^{n-ℓ(λ)} Π_j h_{m_j}[l_j * ch_{R_j}], truncated at ``order``."""
    _require_n(n)
    _require_order(order)
    inner = lambda j: kronecker(lyndon(j), ch_R(j, order)).shift(j - 1)
    return sum_over_partitions(n, _complete_table(inner, n)).truncate(order)


@lru_cache(maxsize=None)
def ch_M(n: int, order: int) -> SymFunc:
    """
    ch_{OT_n} * ch'_{Λ_n}, certified to be a polynomial of degree <= n-2.

    Raises:
        NotPolynomial: If ``order`` < n, or a coefficient at or above q^{n-1}
            survives
    """
    _require_n(n)
    _require_order(order)
    if order < n:
        raise NotPolynomial(f"ch_M({n}) needs max_q_degree >= {n} to certify polynomiality, got {order}")
    return kronecker(ch_OT(n, order), ch_lambda_primed(n)).exact_polynomial(max(n - 2, 0))


@lru_cache(maxsize=None)
def ch_T(n: int, order: int) -> SymFunc:
    """q^{n-1}·(l_n * ch_{R_n}), truncated at ``order``."""
    _require_n(n)
    _require_order(order)
    return kronecker(lyndon(n), ch_R(n, order)).shift(n - 1).truncate(order)


def ch_T_from_OT(n: int, order: int, ot_by_k: Sequence[SymFunc]) -> SymFunc:
    """
    Solve ch_{OT_j} = Σ_{λ⊢j} Π_i h_{m_i}[ch_{T_i}] for ch_{T_n}.

    Args:
        n: Target degree
        order: Truncation order of the result
        ot_by_k: ot_by_k[k-1] is ch_{OT_k} for k = 1..n

    Returns:
        ch_{T_n}
    """
    _require_n(n)
    if len(ot_by_k) < n:
        raise ValueError(f"ch_T_from_OT({n}) needs OT characters for k = 1..{n}, got {len(ot_by_k)}")
    solved: List[SymFunc] = []
    plethysms: Dict[int, List[SymFunc]] = {}

    def factor_for(j: int):
        def factor(i: int, m: int) -> Optional[SymFunc]:
            if i == j:
                return None
            if i not in plethysms:
                plethysms[i] = complete_plethysms(n // i, solved[i - 1])
            return plethysms[i][m]
        return factor

    for j in range(1, n + 1):
        ot = ot_by_k[j - 1].truncate(order)
        solved.append((ot - sum_over_partitions(j, factor_for(j))).truncate(order))
    return solved[n - 1]


def gen_fun_D(max_n: int, order: int, check: bool = True) -> GradedFamily:
    """
    Components of (Exp((1-q)L) - 1)/(1-q), L = Σ_n q^{n-1} l_n t^n.

    Raises:
        IdentityFailure: With ``check``, if a component differs from ch_D(n)
    """
    _require_n(max_n)
    _require_order(order)
    family = GradedFamily.from_function(max_n, lambda n: lyndon(n).scale(_q_power(n - 1) * one_minus_q()))
    exp_family = plethystic_exp(family)
    components = []
    for n, numerator in enumerate(exp_family.components, start=1):
        value = _divide_by_one_minus_q(numerator, max(n - 2, 0), max(order, n + 1))
        if check:
            _assert_equal(f"gen_fun_D component {n}", value, ch_D(n))
        components.append(value)
    return GradedFamily(tuple(components))


def gen_fun_OT(max_n: int, order: int, check: bool = True) -> GradedFamily:
    """
    Components of Exp((1-q)·(L * H[X/(1-q)])) - 1.

    Component n of the inner family is (1-q)·q^{n-1}·(l_n * h_n[X/(1-q)]).

    Raises:
        IdentityFailure: With ``check``, if a component differs from ch_OT(n, order)
    """
    _require_n(max_n)
    _require_order(order)

    lyndon_family = GradedFamily.from_function(max_n, lambda n: lyndon(n).scale(one_minus_q(order).shift(n - 1)))
    complete_family = GradedFamily.from_function(max_n, lambda n: ch_sym_perm(n, order))
    inner = lyndon_family.kronecker(complete_family)
    exp_family = plethystic_exp(GradedFamily(tuple(f.truncate(order) for f in inner.components)))
    components = []
    for n, value in enumerate(exp_family.components, start=1):
        value = value.truncate(order)
        if check:
            _assert_equal(f"gen_fun_OT component {n}", value, ch_OT(n, order))
        components.append(value)
    return GradedFamily(tuple(components))


@dataclass(frozen=True)
class NamedCharacter:
    """A computed character together with how it was requested."""
    name: str
    n: int
    value: SymFunc
    truncation: Optional[int]


EXACT_NAMES = ("C", "D", "D_alt", "Lambda", "LambdaP", "lyndon")
SERIES_NAMES = ("OT", "M", "R", "T")

_EXACT: Dict[str, Callable[[int], SymFunc]] = {
    "C": ch_C,
    "D": ch_D,
    "D_alt": ch_D_alt,
    "Lambda": ch_lambda,
    "LambdaP": ch_lambdaP_primed,
    "lyndon": lyndon,
}
_SERIES: Dict[str, Callable[[int, int], SymFunc]] = {
    "OT": ch_OT,
    "M": ch_M,
    "R": ch_R,
    "T": ch_T,
}


def named_character(name: str, n: int, order: Optional[int] = None) -> NamedCharacter:
    """
    Dispatch a character by name.

    Args:
        name: One of EXACT_NAMES or SERIES_NAMES
        n: Degree
        order: Truncation order for series names; defaults to n+1

    Returns:
        NamedCharacter; the exact names carry truncation None
    """
    if name in _EXACT:
        value = _EXACT[name](n)
        for lam, coeff in value:
            if not coeff.is_exact():
                raise NotPolynomial(f"{name}({n}) coefficient of {list(lam)} is not an exact polynomial")
        return NamedCharacter(name=name, n=n, value=value, truncation=None)
    if name in _SERIES:
        order = order if order is not None else n + 1
        return NamedCharacter(name=name, n=n, value=_SERIES[name](n, order), truncation=order)
    raise ValueError(f"Unknown character name {name!r}; expected one of {EXACT_NAMES + SERIES_NAMES}")
