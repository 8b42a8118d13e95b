"""
Homogeneous symmetric functions with q-series coefficients.

Every SymFunc is stored in one of the bases m, e, h, p, s. The power-sum basis
is the working basis: outer products concatenate parts, Kronecker products are
diagonal and plethysm is a substitution. The other bases are reached from p
through the character table (s) or Newton's identities (h, e, m).
"""

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from src.combinat.partitions import Partition, partitions_of, z_of
from src.qseries.series import (
    NegateQ,
    QSeries,
    Scalar,
    qs_exact_polynomial,
    qs_linear_combination,
    qs_mul,
    qs_substitute,
)
from src.symfunc.character_table import character_table

logger = logging.getLogger(__name__)


class DegreeMismatch(ValueError):
    """Raised when an operation needs symmetric functions of equal degree."""


class Basis(Enum):
    M = "m"
    E = "e"
    H = "h"
    P = "p"
    S = "s"


EMPTY = Partition._make(())
ScalarDict = Dict[Partition, Fraction]


class SymFunc:
    """
    A homogeneous symmetric function of degree ``degree``.

    Args:
        degree: Degree n of every basis element in ``terms``
        basis: Basis the keys refer to
        terms: Map partition -> QSeries; zero coefficients are dropped
    """

    __slots__ = ("degree", "basis", "terms")

    def __init__(self, degree: int, basis: Union[Basis, str], terms: Dict[Partition, QSeries]):
        basis = Basis(basis)
        clean: Dict[Partition, QSeries] = {}
        for key, coeff in terms.items():
            lam = key if isinstance(key, Partition) else Partition(key)
            if lam.n != degree:
                raise DegreeMismatch(f"Partition {tuple(lam)} is not a partition of {degree}")
            if not isinstance(coeff, QSeries):
                coeff = QSeries.constant(coeff)
            if not coeff.is_zero():
                clean[lam] = coeff
        self.degree = degree
        self.basis = basis
        self.terms = clean

    @classmethod
    def _from_clean(cls, degree: int, basis: Basis, terms: Dict[Partition, QSeries]) -> "SymFunc":
        obj = cls.__new__(cls)
        obj.degree = degree
        obj.basis = basis
        obj.terms = {lam: c for lam, c in terms.items() if not c.is_zero()}
        return obj

    # --- Constructors ---

    @classmethod
    def zero(cls, degree: int, basis: Basis = Basis.P) -> "SymFunc":
        return cls._from_clean(degree, basis, {})

    @classmethod
    def one(cls, coeff: Optional[QSeries] = None) -> "SymFunc":
        """The degree-0 constant (the unit of the outer product)."""
        return cls._from_clean(0, Basis.P, {EMPTY: coeff if coeff is not None else QSeries.one()})

    @classmethod
    def basis_element(cls, basis: Union[Basis, str], parts: Iterable[int],
                      coeff: Optional[QSeries] = None) -> "SymFunc":
        lam = Partition.from_unsorted(parts)
        return cls._from_clean(lam.n, Basis(basis), {lam: coeff if coeff is not None else QSeries.one()})

    # --- Inspection ---

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[Partition, QSeries]]:
        return iter(self.terms.items())

    def coefficient(self, lam: Iterable[int]) -> QSeries:
        lam = lam if isinstance(lam, Partition) else Partition.from_unsorted(lam)
        return self.terms.get(lam, QSeries.zero())

    @property
    def order(self) -> Optional[int]:
        """Smallest truncation order among the coefficients (None = exact)."""
        orders = [c.order for c in self.terms.values() if c.order is not None]
        return min(orders) if orders else None

    def max_q_degree(self) -> int:
        return max((c.degree() for c in self.terms.values()), default=-1)

    def q_coefficient(self, k: int) -> "SymFunc":
        """The coefficient of q^k, as a q-free symmetric function."""
        terms = {lam: QSeries.constant(c[k]) for lam, c in self.terms.items()
                 if c.order is None or k < c.order}
        return SymFunc._from_clean(self.degree, self.basis, terms)

    # --- Basis changes ---

    def to_basis(self, target: Union[Basis, str]) -> "SymFunc":
        return basis_convert(self, Basis(target))

    def to_power(self) -> "SymFunc":
        return basis_convert(self, Basis.P)

    # --- Coefficientwise maps ---

    def map_coefficients(self, fn) -> "SymFunc":
        return SymFunc._from_clean(self.degree, self.basis, {lam: fn(c) for lam, c in self.terms.items()})

    def truncate(self, order: Optional[int]) -> "SymFunc":
        return self.map_coefficients(lambda c: c.truncate(order))

    def negate_q(self) -> "SymFunc":
        """ch'(q) = ch(-q)."""
        return self.map_coefficients(lambda c: qs_substitute(c, NegateQ()))

    def shift(self, k: int) -> "SymFunc":
        """Multiply by q^k."""
        return self.map_coefficients(lambda c: c.shift(k))

    def exact_polynomial(self, max_degree: int) -> "SymFunc":
        """Certify every coefficient is a polynomial of degree <= max_degree."""
        return self.map_coefficients(lambda c: qs_exact_polynomial(c, max_degree))

    def scale(self, c: Union[Scalar, QSeries]) -> "SymFunc":
        if isinstance(c, QSeries):
            return self.map_coefficients(lambda x: qs_mul(c, x))
        return self.map_coefficients(lambda x: x.scale(c))

    # --- Arithmetic ---

    def _aligned(self, other: "SymFunc") -> Tuple["SymFunc", "SymFunc"]:
        if self.degree != other.degree:
            raise DegreeMismatch(f"Degrees {self.degree} and {other.degree} differ")
        if self.basis == other.basis:
            return self, other
        return self.to_power(), other.to_power()

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for lam, c in b.terms.items():
            terms[lam] = terms[lam] + c if lam in terms else c
        return SymFunc._from_clean(a.degree, a.basis, terms)

    def __neg__(self) -> "SymFunc":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return outer_mul(self, other)
        if isinstance(other, (int, Fraction, QSeries)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QSeries)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        a, b = self._aligned(other)
        return a.terms == b.terms

    __hash__ = None

    def agrees_with(self, other: "SymFunc") -> bool:
        """Equality of all q-coefficients known on both sides."""
        if self.degree != other.degree:
            return False
        a, b = self.to_power(), other.to_power()
        for lam in set(a.terms) | set(b.terms):
            if not a.coefficient(lam).agrees_with(b.coefficient(lam)):
                return False
        return True

    def __repr__(self) -> str:
        body = " + ".join(
            f"({c.to_str()})*{self.basis.value}{list(lam)}" for lam, c in sorted(self.terms.items(), reverse=True)
        )
        return f"SymFunc[{self.degree}]({body or '0'})"


def s(*parts: int) -> SymFunc:
    return SymFunc.basis_element(Basis.S, parts)


def p(*parts: int) -> SymFunc:
    return SymFunc.basis_element(Basis.P, parts)


def h(*parts: int) -> SymFunc:
    return SymFunc.basis_element(Basis.H, parts)


def e(*parts: int) -> SymFunc:
    return SymFunc.basis_element(Basis.E, parts)


def m(*parts: int) -> SymFunc:
    return SymFunc.basis_element(Basis.M, parts)


# --- Scalar expansions (q-free) used by the basis changes ---

def _scalar_mul(a: ScalarDict, b: ScalarDict) -> ScalarDict:
    out: ScalarDict = {}
    for lam, x in a.items():
        for mu, y in b.items():
            key = lam + mu
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _scalar_add(target: ScalarDict, source: ScalarDict, c: Scalar) -> None:
    for lam, x in source.items():
        target[lam] = target.get(lam, 0) + c * x


@lru_cache(maxsize=None)
def _complete_in_power(n: int) -> ScalarDict:
    """h_n in the p-basis from n·h_n = Σ_{k=1}^n p_k h_{n-k}."""
    if n == 0:
        return {EMPTY: Fraction(1)}
    acc: ScalarDict = {}
    for k in range(1, n + 1):
        _scalar_add(acc, _scalar_mul({Partition._make((k,)): Fraction(1)}, _complete_in_power(n - k)), 1)
    return {lam: c / n for lam, c in acc.items() if c}


@lru_cache(maxsize=None)
def _elementary_in_power(n: int) -> ScalarDict:
    """e_n in the p-basis from n·e_n = Σ_{k=1}^n (-1)^{k-1} p_k e_{n-k}."""
    if n == 0:
        return {EMPTY: Fraction(1)}
    acc: ScalarDict = {}
    for k in range(1, n + 1):
        sign = 1 if k % 2 else -1
        _scalar_add(acc, _scalar_mul({Partition._make((k,)): Fraction(1)}, _elementary_in_power(n - k)), sign)
    return {lam: c / n for lam, c in acc.items() if c}


@lru_cache(maxsize=None)
def _power_in_complete(n: int) -> ScalarDict:
    """p_n in the h-basis: p_n = n·h_n - Σ_{i=1}^{n-1} h_i p_{n-i}."""
    acc: ScalarDict = {Partition._make((n,)): Fraction(n)}
    for i in range(1, n):
        _scalar_add(acc, _scalar_mul({Partition._make((i,)): Fraction(1)}, _power_in_complete(n - i)), -1)
    return {lam: c for lam, c in acc.items() if c}


@lru_cache(maxsize=None)
def _power_in_elementary(n: int) -> ScalarDict:
    """p_n in the e-basis: p_n = Σ_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n·e_n."""
    acc: ScalarDict = {Partition._make((n,)): Fraction(n if n % 2 else -n)}
    for i in range(1, n):
        sign = 1 if i % 2 else -1
        _scalar_add(acc, _scalar_mul({Partition._make((i,)): Fraction(1)}, _power_in_elementary(n - i)), sign)
    return {lam: c for lam, c in acc.items() if c}


_SINGLE = {
    (Basis.H, Basis.P): _complete_in_power,
    (Basis.E, Basis.P): _elementary_in_power,
    (Basis.P, Basis.H): _power_in_complete,
    (Basis.P, Basis.E): _power_in_elementary,
}


@lru_cache(maxsize=None)
def multiplicative_expansion(source: Basis, target: Basis, lam: Partition) -> ScalarDict:
    """Expand the product basis element source_λ in a multiplicative target basis."""
    single = _SINGLE[(source, target)]
    result: ScalarDict = {EMPTY: Fraction(1)}
    for part in lam:
        result = _scalar_mul(result, single(part))
    return result


def _expand(f: SymFunc, expansion) -> Dict[Partition, QSeries]:
    pairs: Dict[Partition, List[Tuple[Scalar, QSeries]]] = {}
    for lam, coeff in f.terms.items():
        for mu, c in expansion(lam).items():
            pairs.setdefault(mu, []).append((c, coeff))
    return {mu: qs_linear_combination(items) for mu, items in pairs.items()}


def to_power(f: SymFunc) -> SymFunc:
    n = f.degree
    if f.basis == Basis.P:
        return f
    if f.basis in (Basis.H, Basis.E):
        terms = _expand(f, lambda lam: multiplicative_expansion(f.basis, Basis.P, lam))
    elif f.basis == Basis.S:
        # s_λ = Σ_μ χ_λ(μ)/z_μ p_μ
        table = character_table(n)
        terms = {}
        for mu in table.partitions:
            col = table.column(mu)
            pairs = [(col[table.index(lam)], c) for lam, c in f.terms.items()]
            combo = qs_linear_combination(pairs)
            if combo is not None and not combo.is_zero():
                terms[mu] = combo.scale(Fraction(1, z_of(mu)))
    else:
        # m_μ = Σ_ν P_{νμ}/z_ν p_ν, with P the h-expansion of p_ν.
        terms = {}
        for nu in partitions_of(n):
            in_h = multiplicative_expansion(Basis.P, Basis.H, nu)
            pairs = [(in_h.get(mu, 0), c) for mu, c in f.terms.items()]
            combo = qs_linear_combination(pairs)
            if combo is not None and not combo.is_zero():
                terms[nu] = combo.scale(Fraction(1, z_of(nu)))
    return SymFunc._from_clean(n, Basis.P, terms)


def from_power(f: SymFunc, target: Basis) -> SymFunc:
    n = f.degree
    if target == Basis.P:
        return f
    if target in (Basis.H, Basis.E):
        terms = _expand(f, lambda lam: multiplicative_expansion(Basis.P, target, lam))
    elif target == Basis.S:
        # p_μ = Σ_λ χ_λ(μ) s_λ
        table = character_table(n)
        terms = {}
        for i, lam in enumerate(table.partitions):
            row = table.values[i]
            pairs = [(row[table.index(mu)], c) for mu, c in f.terms.items()]
            combo = qs_linear_combination(pairs)
            if combo is not None:
                terms[lam] = combo
    else:
        # m-coefficient of f is <f, h_μ> = Σ_ν z_ν f_ν [p_ν]h_μ
        terms = {}
        for mu in partitions_of(n):
            h_mu = multiplicative_expansion(Basis.H, Basis.P, mu)
            pairs = [(z_of(nu) * h_mu.get(nu, 0), c) for nu, c in f.terms.items()]
            combo = qs_linear_combination(pairs)
            if combo is not None:
                terms[mu] = combo
    return SymFunc._from_clean(n, target, terms)


def basis_convert(f: SymFunc, target: Union[Basis, str]) -> SymFunc:
    """
    Re-express f in ``target``, routing through the power-sum basis.

    Args:
        f: Symmetric function in any basis
        target: Basis to express it in

    Returns:
        The same element in the target basis
    """
    target = Basis(target)
    if f.basis == target:
        return f
    return from_power(to_power(f), target)


def outer_mul(f: SymFunc, g: SymFunc) -> SymFunc:
    """Ordinary product, computed in the p-basis where p_λ·p_μ = p_{λ∪μ}."""
    a, b = to_power(f), to_power(g)
    pairs: Dict[Partition, List[QSeries]] = {}
    for lam, x in a.terms.items():
        for mu, y in b.terms.items():
            pairs.setdefault(lam + mu, []).append(qs_mul(x, y))
    terms = {}
    for key, items in pairs.items():
        total = items[0]
        for item in items[1:]:
            total = total + item
        terms[key] = total
    return SymFunc._from_clean(f.degree + g.degree, Basis.P, terms)


def kronecker(f: SymFunc, g: SymFunc) -> SymFunc:
    """
    Kronecker (inner tensor) product.

    p_λ * p_μ = δ_{λμ} z_λ p_λ; q-coefficients multiply as series, so the q^k
    coefficient of the result is Σ_{i+j=k} f_i * g_j.
    """
    if f.degree != g.degree:
        raise DegreeMismatch(f"Kronecker product needs equal degrees, got {f.degree} and {g.degree}")
    a, b = to_power(f), to_power(g)
    terms = {}
    for lam, x in a.terms.items():
        y = b.terms.get(lam)
        if y is not None:
            terms[lam] = qs_mul(x, y).scale(z_of(lam))
    return SymFunc._from_clean(f.degree, Basis.P, terms)


def scalar_product(f: SymFunc, g: SymFunc) -> QSeries:
    """Hall inner product <f, g> = Σ_λ z_λ f_λ g_λ in p-coordinates."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"Scalar product needs equal degrees, got {f.degree} and {g.degree}")
    a, b = to_power(f), to_power(g)
    pairs = []
    for lam, x in a.terms.items():
        y = b.terms.get(lam)
        if y is not None:
            pairs.append((z_of(lam), qs_mul(x, y)))
    combo = qs_linear_combination(pairs)
    return combo if combo is not None else QSeries.zero()


def hilbert(f: SymFunc) -> QSeries:
    """Graded dimension: n! times the coefficient of p_{1^n}."""
    n = f.degree
    coeff = to_power(f).coefficient(Partition._make((1,) * n))
    return coeff.scale(factorial(n))


def is_schur_positive(f: SymFunc) -> bool:
    return all(c.is_nonnegative() for _, c in basis_convert(f, Basis.S))


def is_schur_integral(f: SymFunc) -> bool:
    return all(c.is_integral() for _, c in basis_convert(f, Basis.S))


def schur_terms(f: SymFunc) -> List[Tuple[int, Partition, Fraction]]:
    """(q-power, partition, coefficient) triples of f in the s-basis."""
    triples = []
    for lam, c in basis_convert(f, Basis.S):
        for k, x in c.items():
            triples.append((k, lam, Fraction(x)))
    return sorted(triples, key=lambda t: (t[0], tuple(-x for x in t[1])))
