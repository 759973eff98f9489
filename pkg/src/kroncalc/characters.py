"""Irreducible S_n character values with a persistable memo cache.

Values come from the kernel's Murnaghan-Nakayama strip expansion; the hook
length formula provides an independent dimension oracle.  The cache file
format is newline-delimited text: a single header line with a format-version
integer, then one record per entry ``n<TAB>lam<TAB>rho<TAB>value`` with all
numbers in decimal (never binary floats).
"""

from __future__ import annotations

import os
import threading
from math import factorial

from . import kernel
from .partitions import CycleType, Partition, format_partition, partitions_of

CACHE_FORMAT_VERSION = 1


class CharacterCache:
    """Memo map (lam, rho) -> character value, keyed by canonical text form.

    Entries never change once written; concurrent readers are safe and
    insertions are serialized, so duplicated concurrent computation of one
    entry is idempotent rather than inconsistent.
    """

    def __init__(self):
        self.version = CACHE_FORMAT_VERSION
        self._entries: dict[tuple[int, str, str], int] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._entries)

    def get(self, key):
        return self._entries.get(key)

    def put(self, key, value: int):
        with self._lock:
            old = self._entries.get(key)
            if old is not None and old != value:
                raise ValueError(f"cache entry {key} would change: {old} -> {value}")
            self._entries[key] = value

    def save(self, path):
        """Write all entries, sorted, atomically; reloading is bit-exact."""
        tmp = f"{path}.tmp.{os.getpid()}"
        with open(tmp, "w", encoding="ascii") as fh:
            fh.write(f"{self.version}\n")
            for (n, lam, rho), value in sorted(self._entries.items()):
                fh.write(f"{n}\t{lam}\t{rho}\t{value}\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path) -> "CharacterCache":
        cache = cls()
        with open(path, encoding="ascii") as fh:
            header = fh.readline().strip()
            if not header.isdigit() or int(header) != CACHE_FORMAT_VERSION:
                raise ValueError(f"unsupported cache format version {header!r}")
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                n, lam, rho, value = line.split("\t")
                cache._entries[(int(n), lam, rho)] = int(value)
        return cache

    def merge(self, other: "CharacterCache"):
        for key, value in other._entries.items():
            self.put(key, value)


_default_cache = CharacterCache()


def default_cache() -> CharacterCache:
    return _default_cache


def set_default_cache(cache: CharacterCache):
    global _default_cache
    _default_cache = cache


def character(lam, rho, cache: CharacterCache | None = None) -> int:
    """chi^lam(rho) for |lam| = |rho|, exact and memoized across calls."""
    if isinstance(rho, CycleType):
        rho = rho.underlying
    lam = Partition(lam)
    rho = Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"|lam| = {lam.size} but |rho| = {rho.size}")
    cache = cache or _default_cache
    key = (lam.size, format_partition(lam), format_partition(rho))
    value = cache.get(key)
    if value is None:
        value = kernel.char_value(tuple(lam), tuple(rho))
        cache.put(key, value)
    return value


def character_table(n: int, cache: CharacterCache | None = None):
    """Full table {(lam, rho): chi^lam(rho)} over all lam, rho of n, one batched pass."""
    parts = list(partitions_of(n))
    return {
        (lam, rho): character(lam, rho, cache=cache) for lam in parts for rho in parts
    }


def dimension(lam) -> int:
    """dim of the irreducible indexed by lam, via the hook length formula."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("dimension of the empty partition is undefined")
    conj = [0] * lam[0]
    for p in lam:
        for c in range(p):
            conj[c] += 1
    num = factorial(lam.size)
    for i, p in enumerate(lam):
        for j in range(p):
            num //= p - j + conj[j] - i - 1
    return num


def load_or_new(path) -> CharacterCache:
    """Load the cache at path if present, else start empty."""
    if os.path.exists(path):
        return CharacterCache.load(path)
    return CharacterCache()
