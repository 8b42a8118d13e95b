"""
Integer partitions and symmetric-group class data.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Mapping, Tuple

from sympy import divisors as _sympy_divisors
from sympy import factorint

logger = logging.getLogger(__name__)


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Partitions are plain value types: equality and hashing are those of the
    underlying tuple of parts, so they can be used directly as dictionary keys.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, part in enumerate(parts):
            if part <= 0:
                raise ValueError(f"Partition parts must be positive, got {parts}")
            if i and parts[i - 1] < part:
                raise ValueError(f"Partition parts must be weakly decreasing, got {parts}")
        return cls._make(parts)

    @classmethod
    def _make(cls, parts: Tuple[int, ...]) -> "Partition":
        # No validation: callers guarantee sorted positive parts.
        obj = tuple.__new__(cls, parts)
        obj._n = sum(parts)
        return obj

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(sorted(parts, reverse=True))

    @property
    def n(self) -> int:
        return self._n

    @property
    def length(self) -> int:
        return len(self)

    def __add__(self, other):
        # Union of parts, which is the index of p_λ·p_μ.
        return Partition._make(tuple(sorted(tuple(self) + tuple(other), reverse=True)))

    def scale(self, k: int) -> "Partition":
        """Multiply every part by ``k`` (index of p_k[p_λ])."""
        return Partition._make(tuple(k * p for p in self))

    def multiplicities(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for part in self:
            counts[part] = counts.get(part, 0) + 1
        return counts

    def exponential(self) -> "ExponentialForm":
        return ExponentialForm.from_partition(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition._make(tuple(sum(1 for p in self if p > i) for i in range(self[0])))

    def hook_lengths(self) -> List[int]:
        """Hook lengths of all cells, row by row."""
        conj = self.conjugate()
        return [
            (row_len - j - 1) + (conj[j] - i - 1) + 1
            for i, row_len in enumerate(self)
            for j in range(row_len)
        ]

    def weighted_size(self) -> int:
        """b(λ) = Σ_i (i-1)·λ_i with rows counted from 1."""
        return sum(i * p for i, p in enumerate(self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


@dataclass(frozen=True)
class ExponentialForm:
    """Exponential notation (1^{m_1}, 2^{m_2}, ...) of a partition.

    Only nonzero multiplicities are stored.
    """
    multiplicities: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_partition(cls, lam: Partition) -> "ExponentialForm":
        counts = lam.multiplicities()
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_mapping(cls, multiplicities: Mapping[int, int]) -> "ExponentialForm":
        for j, m in multiplicities.items():
            if j <= 0 or m < 0:
                raise ValueError(f"Invalid multiplicity {m} for part size {j}")
        return cls(tuple(sorted((j, m) for j, m in multiplicities.items() if m)))

    @property
    def n(self) -> int:
        return sum(j * m for j, m in self.multiplicities)

    @property
    def length(self) -> int:
        """ℓ(λ), the number of parts."""
        return sum(m for _, m in self.multiplicities)

    @property
    def support_count(self) -> int:
        """c_λ, the number of distinct part sizes."""
        return len(self.multiplicities)

    def to_partition(self) -> Partition:
        parts: List[int] = []
        for j, m in sorted(self.multiplicities, reverse=True):
            parts.extend([j] * m)
        return Partition._make(tuple(parts))


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """
    All partitions of n in reverse lexicographic order.

    Args:
        n: Nonnegative integer

    Returns:
        Tuple of partitions, (n) first and (1^n) last
    """
    if n < 0:
        raise ValueError(f"partitions_of needs n >= 0, got {n}")
    return tuple(Partition._make(parts) for parts in _partitions_bounded(n, n))


def z_of(lam: Partition) -> int:
    """Centralizer order z_λ = Π_j j^{m_j} m_j!."""
    z = 1
    for j, m in lam.multiplicities().items():
        z *= j ** m * factorial(m)
    return z


def moebius(d: int) -> int:
    """Number-theoretic Möbius function, computed from the factorization of d."""
    if d < 1:
        raise ValueError(f"moebius needs d >= 1, got {d}")
    exponents = factorint(d)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def divisors(n: int) -> List[int]:
    """Divisors of n in increasing order."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    return [int(d) for d in _sympy_divisors(n)]


def class_representative(lam: Partition) -> Tuple[int, ...]:
    """
    Canonical permutation of cycle type λ on {0, ..., n-1}.

    Cycles sit on consecutive integers in decreasing part order, e.g.
    (3, 2) gives (0 1 2)(3 4).

    Returns:
        Tuple sigma with sigma[i] the image of i
    """
    image: List[int] = []
    start = 0
    for part in lam:
        image.extend(start + (i + 1) % part for i in range(part))
        start += part
    return tuple(image)
