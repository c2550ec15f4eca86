"""James abacus: p-cores, p-quotients and p-core towers.

Convention: a beta-set is padded to a multiple of p beads; runner ``i`` holds
the beads congruent to ``i`` mod p, and quotient component ``i`` is read off
runner ``i``. With this padding the quotient does not depend on how many
extra multiples of p beads are used.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import CorruptionError
from .partition import EMPTY, Partition, check_prime, format_partition, hook_lengths, parse_partition


def beta_set(lam: Sequence[int], bead_count: int) -> list[int]:
    """First-column hook lengths of lam padded to ``bead_count`` beads, decreasing."""
    if bead_count < len(lam):
        raise ValueError("bead_count smaller than the number of parts")
    return [(lam[i] if i < len(lam) else 0) + bead_count - 1 - i for i in range(bead_count)]


def from_beta_set(beads: Sequence[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    b = len(beads)
    if len(set(beads)) != b or (beads and beads[-1] < 0):
        raise ValueError("beads must be distinct nonnegative integers")
    parts = [beads[i] - (b - 1 - i) for i in range(b)]
    return Partition._trusted(x for x in parts if x > 0)


def _padded(n_parts: int, p: int) -> int:
    return -(-n_parts // p) * p


def _runners(lam: Partition, p: int) -> list[list[int]]:
    """Bead positions on each runner, decreasing."""
    runners: list[list[int]] = [[] for _ in range(p)]
    for beta in beta_set(lam, _padded(len(lam), p)):
        runners[beta % p].append(beta // p)
    return runners


def _decompose(lam: Partition, p: int) -> tuple[Partition, tuple[Partition, ...]]:
    runners = _runners(lam, p)
    quotient = tuple(from_beta_set(r) for r in runners)
    core_beads = [i + p * pos for i, r in enumerate(runners) for pos in range(len(r))]
    return from_beta_set(core_beads), quotient


@lru_cache(maxsize=1 << 16)
def _decompose_cached(lam: Partition, p: int) -> tuple[Partition, tuple[Partition, ...]]:
    return _decompose(lam, p)


def p_core(lam: Partition, p: int) -> Partition:
    check_prime(p)
    return _decompose_cached(Partition(lam), p)[0]


def p_quotient(lam: Partition, p: int) -> tuple[Partition, ...]:
    check_prime(p)
    return _decompose_cached(Partition(lam), p)[1]


def weight(lam: Partition, p: int) -> int:
    return (sum(lam) - sum(p_core(lam, p))) // p


def is_p_core(lam: Partition, p: int) -> bool:
    return all(h % p for h in hook_lengths(lam))


def from_core_quotient(core: Partition, quotient: Sequence[Partition], p: int) -> Partition:
    """The unique partition with the given p-core and p-quotient."""
    check_prime(p)
    core = Partition(core)
    if len(quotient) != p:
        raise ValueError(f"quotient must have exactly {p} components")
    if not is_p_core(core, p):
        raise ValueError(f"{format_partition(core)} is not a {p}-core")
    counts = [len(r) for r in _runners(core, p)]
    # each runner needs at least as many beads as its quotient component has parts
    extra = max([0] + [len(q) - c for q, c in zip(quotient, counts)])
    beads = []
    for i, q in enumerate(quotient):
        beads.extend(i + p * pos for pos in beta_set(q, counts[i] + extra))
    return from_beta_set(beads)


@dataclass(frozen=True)
class CoreTower:
    """Layer j holds p**j p-cores, indexed by (i_1, ..., i_j) in lexicographic order."""

    p: int
    layers: tuple[tuple[Partition, ...], ...]

    def __post_init__(self):
        check_prime(self.p)
        if not self.layers or len(self.layers[0]) != 1:
            raise ValueError("layer 0 must hold exactly one partition")
        for j, layer in enumerate(self.layers):
            if len(layer) != self.p**j:
                raise ValueError(f"layer {j} must hold {self.p ** j} entries, got {len(layer)}")

    def layer_size(self, j: int) -> int:
        """|T_j|, the total size of the partitions on layer j (0 past the top)."""
        if j >= len(self.layers):
            return 0
        return sum(sum(x) for x in self.layers[j])

    @property
    def size(self) -> int:
        return sum(self.layer_size(j) * self.p**j for j in range(len(self.layers)))

    def to_json(self) -> list[list[str]]:
        return [[format_partition(x) for x in layer] for layer in self.layers]

    @classmethod
    def from_json(cls, p: int, data: Sequence[Sequence[str]]) -> "CoreTower":
        return make_tower(p, [[parse_partition(s) for s in layer] for layer in data])


def make_tower(p: int, layers: Sequence[Sequence[Partition]]) -> CoreTower:
    """Build a tower, trimming trailing all-empty layers (layer 0 is always kept)."""
    layers = [tuple(Partition(x) for x in layer) for layer in layers]
    while len(layers) > 1 and not any(layers[-1]):
        layers.pop()
    return CoreTower(p, tuple(layers))


def core_tower(lam: Partition, p: int) -> CoreTower:
    check_prime(p)
    lam = Partition(lam)
    layers = []
    current: list[Partition] = [lam]
    while True:
        pairs = [_decompose_cached(mu, p) if mu else (EMPTY, (EMPTY,) * p) for mu in current]
        layers.append(tuple(core for core, _ in pairs))
        current = [q for _, quotient in pairs for q in quotient]
        if not any(current):
            break
    return make_tower(p, layers)


def from_tower(tower: CoreTower) -> Partition:
    p = tower.p
    for j, layer in enumerate(tower.layers):
        for idx, entry in enumerate(layer):
            if not is_p_core(entry, p):
                raise ValueError(f"tower entry {format_partition(entry)} at layer {j}, index {idx} is not a {p}-core")
    return _build(tower.layers, 0, 0, p)


def _build(layers, depth: int, index: int, p: int) -> Partition:
    # subtree rooted at entry `index` of layer `depth`
    if depth >= len(layers):
        return EMPTY
    core = layers[depth][index]
    quotient = tuple(_build(layers, depth + 1, index * p + i, p) for i in range(p))
    if not any(quotient):
        return core
    lam = from_core_quotient(core, quotient, p)
    if sum(lam) != sum(core) + p * sum(sum(q) for q in quotient):
        raise CorruptionError("size ledger broken while rebuilding from a tower")
    return lam
