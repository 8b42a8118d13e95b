"""
Irreducible characters of the symmetric group by the Murnaghan-Nakayama rule.
"""

import logging
import threading
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Optional, Protocol, Tuple

from src.combinat.partitions import Partition, partitions_of, z_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacterTable:
    """χ_λ(μ) for all λ, μ ⊢ n, rows indexed by λ and columns by μ."""
    n: int
    partitions: Tuple[Partition, ...]
    values: Tuple[Tuple[int, ...], ...]
    _index: Dict[Partition, int] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {lam: i for i, lam in enumerate(self.partitions)})

    def index(self, lam: Partition) -> int:
        return self._index[lam]

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.values[self._index[lam]][self._index[mu]]

    def column(self, mu: Partition) -> Tuple[int, ...]:
        j = self._index[mu]
        return tuple(row[j] for row in self.values)

    def dimension(self, lam: Partition) -> int:
        return self.value(lam, Partition._make((1,) * self.n))

    def is_orthogonal(self) -> bool:
        """Column orthogonality Σ_λ χ_λ(μ)χ_λ(ν) = δ_{μν} z_μ."""
        size = len(self.partitions)
        for a in range(size):
            for b in range(a, size):
                total = sum(row[a] * row[b] for row in self.values)
                expected = z_of(self.partitions[a]) if a == b else 0
                if total != expected:
                    return False
        return True


class TableStore(Protocol):
    def load(self, n: int) -> Optional[CharacterTable]: ...

    def store(self, table: CharacterTable) -> None: ...


@dataclass
class TableStats:
    built: int = 0
    build_ms: float = 0.0
    cache_hits: int = 0


_tables: Dict[int, CharacterTable] = {}
_store: Optional[TableStore] = None
_lock = threading.Lock()
stats = TableStats()


def set_table_store(store: Optional[TableStore]) -> None:
    """Install (or remove, with None) the persistent store consulted on a miss."""
    global _store
    _store = store


def table_store() -> Optional[TableStore]:
    return _store


def clear_memory_cache() -> None:
    with _lock:
        _tables.clear()


def _beta_to_shape(beta: Tuple[int, ...]) -> Tuple[int, ...]:
    length = len(beta)
    ordered = sorted(beta, reverse=True)
    shape = tuple(b - (length - 1 - i) for i, b in enumerate(ordered))
    return tuple(p for p in shape if p > 0)


@lru_cache(maxsize=None)
def mn_character(shape: Tuple[int, ...], cycle_type: Tuple[int, ...]) -> int:
    """
    χ_shape evaluated on the class ``cycle_type`` by rim-hook removal.

    Rim hooks of length r are bead moves b -> b - r on the beta-set of the
    shape; the sign is (-1)^(beads jumped over).
    """
    if not cycle_type:
        return 1 if not shape else 0
    r = cycle_type[0]
    rest = cycle_type[1:]
    length = len(shape)
    beta = tuple(p + (length - 1 - i) for i, p in enumerate(shape))
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = tuple(target if c == b else c for c in beta)
        value = mn_character(_beta_to_shape(new_beta), rest)
        if value:
            total += -value if jumped % 2 else value
    return total


def build_character_table(n: int) -> CharacterTable:
    parts = partitions_of(n)
    values = tuple(
        tuple(mn_character(tuple(lam), tuple(mu)) for mu in parts) for lam in parts
    )
    return CharacterTable(n=n, partitions=parts, values=values)


def character_table(n: int) -> CharacterTable:
    """
    Character table of S_n, memoized in memory and optionally on disk.

    Args:
        n: Degree, n >= 0 (n = 0 gives the 1x1 table of the trivial group)

    Returns:
        The full integer table
    """
    if n < 0:
        raise ValueError(f"character_table needs n >= 0, got {n}")
    table = _tables.get(n)
    if table is not None:
        return table
    with _lock:
        table = _tables.get(n)
        if table is not None:
            return table
        if _store is not None:
            table = _store.load(n)
            if table is not None:
                stats.cache_hits += 1
                logger.info(f"Character table n={n} loaded from cache")
        if table is None:
            start = time.perf_counter()
            table = build_character_table(n)
            elapsed = (time.perf_counter() - start) * 1000
            stats.built += 1
            stats.build_ms += elapsed
            logger.info(f"Built character table n={n} ({len(table.partitions)} classes) in {elapsed:.1f} ms")
            if _store is not None:
                _store.store(table)
        _tables[n] = table
    return table
