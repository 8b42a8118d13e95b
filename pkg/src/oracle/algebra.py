"""
Presentations of OT_n, C_n, D_n and M_n by generators e_ij and relations.

Polynomials in the generators are dicts mapping a monomial (a sorted tuple
of generator indices) to an integer coefficient.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations
from math import gcd
from typing import Dict, List, Tuple

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Polynomial = Dict[Monomial, int]


class TooLarge(RuntimeError):
    """Raised when a graded piece exceeds the configured monomial ceiling."""


class Variant(Enum):
    OT = "OT"
    C = "C"
    D = "D"
    M = "M"

    @classmethod
    def parse(cls, name: str) -> "Variant":
        try:
            return cls(name.upper())
        except ValueError:
            raise ValueError(f"Unknown algebra {name!r}; expected one of ot, c, d, m") from None


def _normalized(poly: Polynomial) -> Tuple[Tuple[Monomial, int], ...]:
    """Key identifying a relation up to a nonzero scalar."""
    items = sorted((mono, c) for mono, c in poly.items() if c)
    if not items:
        return ()
    lead = items[0][1]
    sign = 1 if lead > 0 else -1
    g = 0
    for _, c in items:
        g = gcd(g, abs(c))
    return tuple((mono, sign * c // g) for mono, c in items)


@dataclass
class PresentedAlgebra:
    """
    One of OT_n, C_n, D_n, M_n as a quotient of Q[e_ij : i < j].

    Generator e_ij (0-based i < j) has index ``index[(i, j)]``; e_ji = -e_ij.

    Args:
        n: Number of points
        variant: Which algebra
    """
    n: int
    variant: Variant
    generators: List[Tuple[int, int]] = field(init=False)
    index: Dict[Tuple[int, int], int] = field(init=False, repr=False)
    quadratic_relations: List[Polynomial] = field(init=False, repr=False)
    linear_relations: List[Polynomial] = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        self.variant = Variant(self.variant)
        self.generators = list(combinations(range(self.n), 2))
        self.index = {pair: k for k, pair in enumerate(self.generators)}
        self.quadratic_relations = self._quadratics()
        self.linear_relations = self._linears()
        logger.info(
            f"{self.variant.value}_{self.n}: {len(self.generators)} generators, "
            f"{len(self.quadratic_relations)} quadratic and {len(self.linear_relations)} linear relations"
        )

    def signed(self, i: int, j: int) -> Tuple[int, int]:
        """(generator index, sign) of e_ij for distinct i, j."""
        if i < j:
            return self.index[(i, j)], 1
        return self.index[(j, i)], -1

    def _product(self, a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[Monomial, int]:
        (x, sx), (y, sy) = self.signed(*a), self.signed(*b)
        return tuple(sorted((x, y))), sx * sy

    def _three_term(self, i: int, j: int, k: int) -> Polynomial:
        poly: Polynomial = {}
        for a, b in (((i, j), (j, k)), ((j, k), (k, i)), ((k, i), (i, j))):
            mono, sign = self._product(a, b)
            poly[mono] = poly.get(mono, 0) + sign
        return poly

    def _triple_square(self, i: int, j: int, k: int) -> Polynomial:
        edges = ((i, j), (j, k), (k, i))
        poly: Polynomial = {}
        for a in edges:
            for b in edges:
                mono, sign = self._product(a, b)
                poly[mono] = poly.get(mono, 0) + sign
        return poly

    def _quadratics(self) -> List[Polynomial]:
        relations: Dict[tuple, Polynomial] = {}

        def add(poly: Polynomial) -> None:
            key = _normalized(poly)
            if key and key not in relations:
                relations[key] = {mono: c for mono, c in poly.items() if c}

        for i, j, k in permutations(range(self.n), 3):
            if self.variant == Variant.D:
                add(self._triple_square(i, j, k))
            else:
                add(self._three_term(i, j, k))
        if self.variant == Variant.C:
            for g in range(len(self.generators)):
                add({(g, g): 1})
        return list(relations.values())

    def _linears(self) -> List[Polynomial]:
        if self.variant not in (Variant.D, Variant.M):
            return []
        relations = []
        for i in range(self.n):
            poly: Polynomial = {}
            for j in range(self.n):
                if j != i:
                    g, sign = self.signed(i, j)
                    poly[(g,)] = poly.get((g,), 0) + sign
            relations.append(poly)
        return relations

    def act(self, sigma: Tuple[int, ...]) -> List[Tuple[int, int]]:
        """Image (generator index, sign) of every generator under the point permutation sigma."""
        return [self.signed(sigma[i], sigma[j]) for i, j in self.generators]
