"""p-blocks of the symmetric group: labels, members, defect groups and heights."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .abacus import core_tower, from_core_quotient, is_p_core, p_core, weight
from .errors import CorruptionError
from .partition import (
    Partition,
    check_prime,
    degree,
    degree_valuation,
    digits,
    format_partition,
    legendre,
    parse_partition,
    partitions,
)


@dataclass(frozen=True, order=True)
class BlockLabel:
    """The block B(core, weight) of S_n with n = |core| + weight * p."""

    p: int
    core: Partition
    weight: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "core", Partition(self.core))
        if self.weight < 0:
            raise ValueError("weight must be nonnegative")
        if not is_p_core(self.core, self.p):
            raise ValueError(f"{format_partition(self.core)} is not a {self.p}-core")

    @property
    def n(self) -> int:
        return sum(self.core) + self.weight * self.p

    def __str__(self) -> str:
        return f"p={self.p} core={format_partition(self.core)} w={self.weight}"

    @classmethod
    def parse(cls, text: str) -> "BlockLabel":
        """Parse ``"p=2 core=1 w=2"``."""
        m = re.fullmatch(r"\s*p=(\d+)\s+core=(\S*)\s+w=(\d+)\s*", text)
        if not m:
            raise ValueError(f"bad block label: {text!r}")
        return cls(int(m[1]), parse_partition(m[2]), int(m[3]))


@dataclass(frozen=True)
class DefectShape:
    """Base-p digits (a_1, ..., a_k) of the weight; D is a product of a_j copies of P_{p^j}."""

    p: int
    exponents: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.exponents)


@dataclass
class BlockReport:
    label: BlockLabel
    members: list[Partition]
    degrees: list[int]
    heights: list[int]
    defect: int
    dl: int
    cd_set: frozenset = field(init=False)
    ht_set: frozenset = field(init=False)

    def __post_init__(self):
        self.cd_set = frozenset(self.degrees)
        self.ht_set = frozenset(self.heights)

    @property
    def passes_thmC(self) -> bool:
        return self.dl <= len(self.ht_set)

    @property
    def passes_questionA(self) -> bool:
        return self.dl <= len(self.cd_set)

    def to_json(self) -> dict:
        return {
            "p": self.label.p,
            "core": format_partition(self.label.core),
            "weight": self.label.weight,
            "n": self.label.n,
            "members": [format_partition(m) for m in self.members],
            "degrees": [str(d) for d in self.degrees],
            "heights": self.heights,
            "defect": self.defect,
            "dl": self.dl,
            "thmC": self.passes_thmC,
            "questionA": self.passes_questionA,
        }


def block_of(lam: Partition, p: int) -> BlockLabel:
    return BlockLabel(p, p_core(lam, p), weight(lam, p))


@lru_cache(maxsize=None)
def _cores_of_size(m: int, p: int) -> tuple[Partition, ...]:
    return tuple(lam for lam in partitions(m) if is_p_core(lam, p))


def block_labels(n: int, p: int) -> list[BlockLabel]:
    """Every p-block of S_n, in sorted label order."""
    check_prime(p)
    return sorted(BlockLabel(p, core, (n - m) // p) for m in range(n % p, n + 1, p) for core in _cores_of_size(m, p))


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def multipartitions(total: int, parts: int):
    """All tuples of ``parts`` partitions with sizes summing to ``total``."""
    for sizes in _weak_compositions(total, parts):
        yield from product(*(partitions(s) for s in sizes))


@lru_cache(maxsize=4096)
def _enumerate(label: BlockLabel) -> tuple[Partition, ...]:
    members = [from_core_quotient(label.core, q, label.p) for q in multipartitions(label.weight, label.p)]
    return tuple(sorted(members, reverse=True))


def enumerate_block(label: BlockLabel) -> list[Partition]:
    """Members of the block, built from quotient tuples and sorted with ``(n)``-like partitions first."""
    return list(_enumerate(label))


def defect_shape(label: BlockLabel) -> DefectShape:
    return DefectShape(label.p, tuple(digits(label.weight, label.p)))


def derived_length(shape: DefectShape) -> int:
    return shape.k


def defect(label: BlockLabel) -> int:
    return legendre(label.weight * label.p, label.p)


def _check_member(lam: Partition, label: BlockLabel) -> None:
    if sum(lam) != label.n or p_core(lam, label.p) != label.core:
        raise ValueError(f"{format_partition(lam)} does not lie in block {label}")


def height_valuation(lam: Partition, label: BlockLabel) -> int:
    """Height straight from the definition: nu_p(chi(1)) - (nu_p(n!) - d(B))."""
    lam = Partition(lam)
    _check_member(lam, label)
    p = label.p
    h = degree_valuation(lam, p) - (legendre(label.n, p) - defect(label))
    if h < 0:
        raise CorruptionError(f"negative height for {format_partition(lam)}")
    return h


def height_tower(lam: Partition, label: BlockLabel) -> int:
    """Height from the p-core tower: (sum_j |T_j| - a_j) / (p - 1), a_j the digits of w."""
    lam = Partition(lam)
    _check_member(lam, label)
    p = label.p
    tower = core_tower(lam, p)
    a = digits(label.weight, p)
    if len(tower.layers) - 1 > len(a):
        raise CorruptionError(f"tower of {format_partition(lam)} reaches past layer {len(a)}")
    excess = sum(tower.layer_size(j) - a[j - 1] for j in range(1, len(a) + 1))
    h, r = divmod(excess, p - 1)
    if r or h < 0:
        raise CorruptionError(f"tower height of {format_partition(lam)} is not a nonnegative integer")
    return h


def block_report(label: BlockLabel, cross_check: bool = False) -> BlockReport:
    members = enumerate_block(label)
    heights = []
    for lam in members:
        h = height_tower(lam, label)
        if cross_check and h != height_valuation(lam, label):
            raise CorruptionError(f"height mismatch for {format_partition(lam)} in {label}")
        heights.append(h)
    return BlockReport(
        label=label,
        members=members,
        degrees=[degree(lam) for lam in members],
        heights=heights,
        defect=defect(label),
        dl=derived_length(defect_shape(label)),
    )
