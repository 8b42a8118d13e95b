"""
Graded families of symmetric functions and sums over partitions.

A GradedFamily stands for F = Σ_{n>=1} f_n t^n with f_n of degree n; the
power of t is the position in the sequence.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from src.combinat.partitions import divisors
from src.symfunc.plethysm import power_plethysm
from src.symfunc.symmetric import DegreeMismatch, SymFunc, kronecker

logger = logging.getLogger(__name__)

Factor = Callable[[int, int], Optional[SymFunc]]


@dataclass(frozen=True)
class GradedFamily:
    """Components f_1, ..., f_{max_n}; component n has degree n."""
    components: Tuple[SymFunc, ...]

    def __post_init__(self):
        for i, f in enumerate(self.components, start=1):
            if f.degree != i:
                raise DegreeMismatch(f"Component {i} has degree {f.degree}")

    @classmethod
    def from_function(cls, max_n: int, fn: Callable[[int], SymFunc]) -> "GradedFamily":
        if max_n < 1:
            raise ValueError(f"max_n must be >= 1, got {max_n}")
        return cls(tuple(fn(n) for n in range(1, max_n + 1)))

    @property
    def max_n(self) -> int:
        return len(self.components)

    def component(self, n: int) -> SymFunc:
        if not 1 <= n <= self.max_n:
            raise IndexError(f"Component {n} outside 1..{self.max_n}")
        return self.components[n - 1]

    def kronecker(self, other: "GradedFamily") -> "GradedFamily":
        """Componentwise Kronecker product of equal-degree components."""
        size = min(self.max_n, other.max_n)
        return GradedFamily(tuple(kronecker(self.components[i], other.components[i]) for i in range(size)))


def sum_over_partitions(n: int, factor: Factor) -> SymFunc:
    """
    Σ_{λ⊢n} Π_{j: m_j>0} factor(j, m_j).

    The sum is distributed over part sizes j = 1..n, so each factor(j, m) is
    evaluated once. A factor of None counts as zero.

    Args:
        n: Degree, n >= 0
        factor: Returns a SymFunc of degree j·m (or None) for part size j
            occurring m times

    Returns:
        The sum as a SymFunc of degree n
    """
    if n < 0:
        raise ValueError(f"sum_over_partitions needs n >= 0, got {n}")
    cache: Dict[Tuple[int, int], Optional[SymFunc]] = {}
    partial: Dict[int, SymFunc] = {0: SymFunc.one()}
    for j in range(1, n + 1):
        updated: Dict[int, SymFunc] = {}
        for t, value in partial.items():
            # what is left after part size j must be 0 or use parts larger than j
            if not 0 < n - t <= j:
                updated[t] = updated[t] + value if t in updated else value
            m = 1
            while t + j * m <= n:
                target = t + j * m
                if 0 < n - target <= j:
                    m += 1
                    continue
                key = (j, m)
                if key not in cache:
                    cache[key] = factor(j, m)
                fac = cache[key]
                if fac is not None and not fac.is_zero():
                    term = value * fac
                    updated[target] = updated[target] + term if target in updated else term
                m += 1
        partial = updated
    return partial.get(n, SymFunc.zero(n))


def plethystic_exp(family: GradedFamily) -> GradedFamily:
    """
    Components 1..max_n of Exp(F) - 1 = Σ_{k>=1} h_k[F].

    Evaluated as exp(G) with G = Σ_k p_k[F]/k: component k of G satisfies
    k·G_k = Σ_{d|k} (k/d)·p_d[f_{k/d}], and n·E_n = Σ_{k=1}^n k·G_k·E_{n-k}.
    """
    max_n = family.max_n
    weighted: List[SymFunc] = [SymFunc.one()]
    for k in range(1, max_n + 1):
        total = SymFunc.zero(k)
        for d in divisors(k):
            inner = family.component(k // d)
            if not inner.is_zero():
                total = total + power_plethysm(d, inner).scale(Fraction(k, d))
        weighted.append(total)
    exp_parts: List[SymFunc] = [SymFunc.one()]
    for n in range(1, max_n + 1):
        total = SymFunc.zero(n)
        for k in range(1, n + 1):
            if weighted[k].is_zero() or exp_parts[n - k].is_zero():
                continue
            total = total + weighted[k] * exp_parts[n - k]
        exp_parts.append(total.scale(Fraction(1, n)))
    logger.info(f"Plethystic exponential evaluated to degree {max_n}")
    return GradedFamily(tuple(exp_parts[1:]))
