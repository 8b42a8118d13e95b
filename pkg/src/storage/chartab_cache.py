"""
On-disk cache of symmetric-group character tables.

One JSON document per table, written atomically (temp file + rename) and
protected by a SHA-256 checksum of its payload.
"""

import json
import logging
import os
import sys
import tempfile
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from cryptography.hazmat.primitives import hashes

from config import CACHE_DIR_NAME, CACHE_ENV_VAR, CACHE_FILE_TEMPLATE, CACHE_FORMAT_VERSION
from src.combinat.partitions import Partition
from src.symfunc.character_table import CharacterTable

logger = logging.getLogger(__name__)

KIND_CHARACTER_TABLE = "character_table"


def payload_checksum(payload: Dict[str, Any]) -> str:
    """Hex SHA-256 of the canonical JSON encoding of ``payload``."""
    digest = hashes.Hash(hashes.SHA256())
    digest.update(json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8"))
    return digest.finalize().hex()


@dataclass
class CacheEntry:
    kind: str
    n: int
    format_version: int
    payload: Dict[str, Any]
    checksum: str

    @classmethod
    def for_table(cls, table: CharacterTable) -> "CacheEntry":
        payload = {
            "partitions": [list(lam) for lam in table.partitions],
            "values": [list(row) for row in table.values],
        }
        return cls(
            kind=KIND_CHARACTER_TABLE,
            n=table.n,
            format_version=CACHE_FORMAT_VERSION,
            payload=payload,
            checksum=payload_checksum(payload),
        )

    def is_valid(self) -> bool:
        return (
            self.kind == KIND_CHARACTER_TABLE
            and self.format_version == CACHE_FORMAT_VERSION
            and self.checksum == payload_checksum(self.payload)
        )

    def to_table(self) -> CharacterTable:
        partitions = tuple(Partition(parts) for parts in self.payload["partitions"])
        values = tuple(tuple(int(v) for v in row) for row in self.payload["values"])
        if any(lam.n != self.n for lam in partitions) or len(values) != len(partitions):
            raise ValueError(f"Cached table for n={self.n} has inconsistent shape")
        return CharacterTable(n=self.n, partitions=partitions, values=values)


def default_cache_dir() -> str:
    """$SYMCHAR_CACHE, else the platform cache location."""
    override = os.getenv(CACHE_ENV_VAR)
    if override:
        return override
    if sys.platform.startswith("win"):
        base = os.getenv("LOCALAPPDATA") or os.path.expanduser("~")
    else:
        base = os.getenv("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, CACHE_DIR_NAME)


def cache_path(directory: str, n: int) -> str:
    return os.path.join(directory, CACHE_FILE_TEMPLATE.format(version=CACHE_FORMAT_VERSION, n=n))


def cache_load(directory: str, n: int) -> Optional[CacheEntry]:
    """
    Read the entry for n, or None when it is missing, stale or corrupted.

    Args:
        directory: Cache directory
        n: Degree of the table

    Returns:
        A validated CacheEntry, or None
    """
    path = cache_path(directory, n)
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = json.load(f)
        entry = CacheEntry(**raw)
    except (OSError, ValueError, TypeError) as e:
        logger.info(f"Ignoring unreadable cache entry {path}: {e}")
        return None
    if entry.n != n or not entry.is_valid():
        logger.info(f"Ignoring stale or corrupted cache entry {path}; the table will be recomputed")
        return None
    return entry


def cache_store(directory: str, entry: CacheEntry) -> bool:
    """Write ``entry`` atomically. Returns False (after logging) on I/O errors."""
    path = cache_path(directory, entry.n)
    tmp_name = None
    try:
        os.makedirs(directory, exist_ok=True)
        with tempfile.NamedTemporaryFile("w", dir=directory, suffix=".tmp", delete=False, encoding="utf-8") as f:
            tmp_name = f.name
            json.dump(asdict(entry), f)
        os.replace(tmp_name, path)
    except OSError as e:
        logger.warning(f"Could not write cache entry {path}: {e}; continuing in memory")
        if tmp_name and os.path.exists(tmp_name):
            try:
                os.remove(tmp_name)
            except OSError:
                pass
        return False
    logger.info(f"Stored character table n={entry.n} in {path}")
    return True


class CharacterTableCache:
    """
    Persistent store for character tables, installed with set_table_store().

    Args:
        directory: Cache directory; defaults to default_cache_dir()
    """

    def __init__(self, directory: Optional[str] = None):
        self.directory = directory or default_cache_dir()
        self.hits = 0
        self.misses = 0

    def load(self, n: int) -> Optional[CharacterTable]:
        entry = cache_load(self.directory, n)
        if entry is None:
            self.misses += 1
            return None
        try:
            table = entry.to_table()
        except (KeyError, TypeError, ValueError) as e:
            logger.info(f"Recomputing character table n={n}: {e}")
            self.misses += 1
            return None
        self.hits += 1
        return table

    def store(self, table: CharacterTable) -> None:
        cache_store(self.directory, CacheEntry.for_table(table))
