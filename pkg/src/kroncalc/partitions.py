"""Integer partition arithmetic: the index objects everything else runs on.

A partition is stored dense as a weakly decreasing tuple of positive ints;
the empty partition of 0 is ``()``.  All counts and orders are exact Python
integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive parts, zeros stripped on construction."""

    __slots__ = ()

    def __new__(cls, parts=()):
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        for i, p in enumerate(ps):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {p}")
            if i and ps[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {ps}")
        return tuple.__new__(cls, ps)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format_partition(self)


@dataclass(frozen=True)
class CycleType:
    """A partition of n read as a conjugacy class of S_n, with its centralizer order."""

    underlying: Partition
    centralizer_order: int

    @classmethod
    def of(cls, rho) -> "CycleType":
        rho = Partition(rho)
        return cls(rho, centralizer_order(rho))


def part(lam, i: int) -> int:
    """Total accessor lambda_i, 1-indexed, 0 beyond the stored length."""
    if i < 1:
        raise ValueError("part index is 1-based")
    return lam[i - 1] if i <= len(lam) else 0


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram; an involution."""
    if not lam:
        return Partition(())
    out = []
    for c in range(lam[0]):
        out.append(sum(1 for p in lam if p > c))
    return Partition(out)


def durfee(lam) -> int:
    """Side of the largest square inside the diagram: max{k : lambda_k >= k}."""
    d = 0
    for i, p in enumerate(lam, start=1):
        if p >= i:
            d = i
        else:
            break
    return d


def stable_durfee(alpha) -> int:
    """Durfee size of alpha[n], which is the same for every valid padding n.

    The padded first row always covers the (1,1) cell, so row k of alpha[n]
    is alpha_{k-1} for k >= 2 and the answer is max{k : k = 1 or alpha_{k-1} >= k}.
    """
    k = 1
    while part(alpha, k) >= k + 1:
        k += 1
    return k


def pad(alpha, n: int) -> Partition:
    """alpha[n] = (n - |alpha|, alpha_1, alpha_2, ...), defined for n >= |alpha| + alpha_1."""
    alpha = Partition(alpha)
    s = alpha.size
    first = alpha[0] if alpha else 0
    if n < s + first:
        raise ValueError(f"pad requires n >= |alpha| + alpha_1 = {s + first}, got {n}")
    return Partition((n - s,) + tuple(alpha))


def scale(n: int, lam) -> Partition:
    """N*lambda: every part multiplied by N."""
    if n < 1:
        raise ValueError("scale factor must be positive")
    return Partition(tuple(n * p for p in lam))


def add(lam, mu) -> Partition:
    """Componentwise sum, the shorter sequence padded with zeros."""
    k = max(len(lam), len(mu))
    return Partition(tuple(part(lam, i) + part(mu, i) for i in range(1, k + 1)))


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, exactly once, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(m, maxpart):
        if m == 0:
            yield ()
            return
        for first in range(min(m, maxpart), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    for t in gen(n, n):
        yield Partition(t)


def count_partitions(n: int) -> int:
    """p(n) by the Euler pentagonal-number recurrence; independent of the enumerator."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            term = 0
            if g1 <= m:
                term += p[m - g1]
            if g2 <= m:
                term += p[m - g2]
            total += term if k % 2 else -term
            k += 1
        p[m] = total
    return p[n]


def centralizer_order(rho) -> int:
    """z_rho = prod_i i^{m_i} m_i! over the part multiplicities of rho."""
    z = 1
    mult: dict[int, int] = {}
    for p in rho:
        mult[p] = mult.get(p, 0) + 1
    for v, m in mult.items():
        z *= v**m * factorial(m)
    return z


def cycle_types(n: int) -> Iterator[CycleType]:
    """Conjugacy classes of S_n with centralizer orders, in reverse lex order."""
    for rho in partitions_of(n):
        yield CycleType(rho, centralizer_order(rho))


def sign_of_class(rho) -> int:
    """Sign character on the class rho: (-1)^(n - number of cycles)."""
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def parse_partition(text: str) -> Partition:
    """Parse the canonical text syntax: ``8,2^5`` means (8,2,2,2,2,2); '' or '-' is empty.

    Grammar: parts := item (',' item)*, item := INT | INT '^' INT, no whitespace.
    """
    if text in ("", "-"):
        return Partition(())
    parts: list[int] = []
    for item in text.split(","):
        if "^" in item:
            v, _, m = item.partition("^")
            value, mult = _int(v, item), _int(m, item)
        else:
            value, mult = _int(item, item), 1
        if value < 1 or mult < 1:
            raise ValueError(f"invalid partition item {item!r}")
        parts.extend([value] * mult)
    return Partition(parts)


def _int(s: str, item: str) -> int:
    if not s.isdigit():
        raise ValueError(f"invalid partition item {item!r}")
    return int(s)


def format_partition(lam) -> str:
    """Canonical text form with exponent shorthand; inverse of parse_partition."""
    out = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        run = j - i
        out.append(f"{lam[i]}^{run}" if run > 1 else f"{lam[i]}")
        i = j
    return ",".join(out)
