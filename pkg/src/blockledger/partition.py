"""Integer partitions: conjugation, hooks, degrees and p-adic valuations."""
from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    ``Partition(())`` is the empty partition. Trailing zeros are dropped on
    construction; anything else that is not weakly decreasing and positive
    raises ``ValueError``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # skips validation; callers guarantee canonical form
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse the comma syntax, e.g. ``"3,1,1"``. ``""`` and ``"0"`` give the empty partition."""
    text = text.strip()
    if text in ("", "0", "()", "∅"):
        return EMPTY
    try:
        parts = [int(tok) for tok in text.replace(" ", "").strip("()").split(",") if tok != ""]
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(map(str, lam)) if lam else "0"


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition._trusted(sum(1 for part in lam if part > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    """Hook lengths of every box, listed row by row."""
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def degree(lam: Partition) -> int:
    """chi^lam(1) by the hook-length formula."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def legendre(m: int, p: int) -> int:
    """nu_p(m!) = sum of floor(m / p^i)."""
    check_prime(p)
    if m < 0:
        raise ValueError("legendre needs a nonnegative integer")
    total = 0
    while m:
        m //= p
        total += m
    return total


def valuation(m: int, p: int) -> int:
    """Exponent of p in the nonzero integer m."""
    if m == 0:
        raise ValueError("valuation of zero is undefined")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def degree_valuation(lam: Partition, p: int) -> int:
    """nu_p(chi^lam(1)) without forming the degree."""
    check_prime(p)
    return legendre(sum(lam), p) - sum(valuation(h, p) for h in hook_lengths(lam) if h % p == 0)


def digits(m: int, p: int) -> list[int]:
    """Base-p digits of m, least significant first; empty for m = 0."""
    out = []
    while m:
        m, r = divmod(m, p)
        out.append(r)
    return out


def _partitions_max(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_max(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition._trusted(t) for t in _partitions_max(n, n))


def partition_count(n: int) -> int:
    """Number of partitions of n, via Euler's pentagonal recurrence."""
    counts = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * counts[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * counts[m - g2]
            k += 1
        counts[m] = total
    return counts[n]
