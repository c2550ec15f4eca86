"""The partitions lambda_0, ..., lambda_{k-1} of a block, with heights 0, ..., k-1.

Each step rewrites two adjacent layers of the previous partition's core tower:
the lower layer grows by p boxes and the upper one loses a box, which raises
the height by exactly one. New tower entries are placed at the
lexicographically first positions of their layer.
"""
from __future__ import annotations

from dataclasses import dataclass

from .abacus import CoreTower, core_tower, from_tower, make_tower, p_core
from .blocks import BlockLabel, defect_shape, height_tower, height_valuation
from .errors import CorruptionError
from .partition import EMPTY, Partition, check_prime, conjugate, degree, format_partition


def gamma_a(p: int, a: int) -> Partition:
    """The p-core (p, 1^a) of size p + a."""
    check_prime(p)
    if not 1 <= a <= p - 1:
        raise ValueError(f"a must lie in [1, {p - 1}], got {a}")
    return Partition((p,) + (1,) * a)


@dataclass
class FamilyReport:
    label: BlockLabel
    members: list[Partition]
    towers: list[CoreTower]
    heights: list[int]
    self_conjugate_flags: list[bool]

    @property
    def k(self) -> int:
        return len(self.members)

    def rows(self) -> list[dict]:
        return [
            {
                "j": j,
                "partition": format_partition(lam),
                "degree": str(degree(lam)),
                "height": h,
                "self_conjugate": sc,
            }
            for j, (lam, h, sc) in enumerate(zip(self.members, self.heights, self.self_conjugate_flags))
        ]


def _layer(p: int, depth: int, *entries: Partition) -> tuple[Partition, ...]:
    return tuple(entries) + (EMPTY,) * (p**depth - len(entries))


def _single(layer) -> Partition | None:
    """The entry of a layer of the shape (x, 0, ..., 0), or None."""
    if any(layer[1:]):
        return None
    return layer[0]


def _is_row(lam: Partition, p: int) -> bool:
    # (a) with a in [1, p-1]
    return len(lam) == 1 and 1 <= lam[0] <= p - 1


def _hook_a(lam: Partition, p: int) -> int | None:
    # a if lam == gamma_a, else None
    if len(lam) >= 2 and lam[0] == p and all(x == 1 for x in lam[1:]) and len(lam) - 1 <= p - 1:
        return len(lam) - 1
    return None


def _rewrite_lower(layer, p: int, depth: int) -> tuple[Partition, ...]:
    single = _single(layer)
    if single is None:
        raise CorruptionError(f"layer {depth} is not of the form (x, 0, ..., 0)")
    if not single:
        return _layer(p, depth, Partition((p - 1,)), Partition((1,)))
    if _is_row(single, p):
        return _layer(p, depth, gamma_a(p, single[0]))
    raise CorruptionError(f"layer {depth} starts with unexpected {format_partition(single)}")


def _rewrite_upper(layer, p: int, depth: int) -> tuple[Partition, ...]:
    pair = (Partition((p - 1,)), Partition((1,)))
    if tuple(layer[:2]) == pair and not any(layer[2:]):
        return _layer(p, depth, Partition((p - 1,)))
    single = _single(layer)
    if single is None:
        raise CorruptionError(f"layer {depth} has an unexpected shape")
    if _is_row(single, p):
        a = single[0]
        return _layer(p, depth, Partition((a - 1,)) if a > 1 else EMPTY)
    a = _hook_a(single, p)
    if a is None:
        raise CorruptionError(f"layer {depth} starts with unexpected {format_partition(single)}")
    if a >= 2:
        return _layer(p, depth, gamma_a(p, a - 1))
    return _layer(p, depth, *pair)


def family_towers(label: BlockLabel) -> list[CoreTower]:
    """Core towers of lambda_0, ..., lambda_{k-1}."""
    p = label.p
    a = defect_shape(label).exponents
    k = len(a)
    if k == 0:
        raise ValueError("the family needs a block of positive weight")
    layers = [(label.core,)] + [_layer(p, i, Partition((a[i - 1],)) if a[i - 1] else EMPTY) for i in range(1, k + 1)]
    towers = [make_tower(p, layers)]
    for j in range(1, k):
        lo, hi = k - j, k - j + 1
        layers = list(layers)
        layers[lo] = _rewrite_lower(layers[lo], p, lo)
        layers[hi] = _rewrite_upper(layers[hi], p, hi)
        towers.append(make_tower(p, layers))
    return towers


def lambda_family(label: BlockLabel) -> FamilyReport:
    """Build the family and check block membership and the height ladder before returning it."""
    if label.weight == 0:
        raise ValueError("the family needs a block of positive weight")
    towers = family_towers(label)
    members = [from_tower(t) for t in towers]
    heights = []
    for j, (lam, tower) in enumerate(zip(members, towers)):
        if sum(lam) != label.n or p_core(lam, label.p) != label.core:
            raise CorruptionError(f"lambda_{j} = {format_partition(lam)} left the block {label}")
        if core_tower(lam, label.p) != tower:
            raise CorruptionError(f"lambda_{j} does not reproduce its tower")
        h = height_tower(lam, label)
        if h != j or height_valuation(lam, label) != j:
            raise CorruptionError(f"lambda_{j} has height {h}")
        heights.append(h)
    return FamilyReport(label, members, towers, heights, [lam == conjugate(lam) for lam in members])


@dataclass
class FamilyCheck:
    ok: bool
    k: int
    diagnostics: str = ""


def verify_family(label: BlockLabel) -> FamilyCheck:
    """Re-check a family from scratch; never raises on a failed condition."""
    k = len(defect_shape(label).exponents)
    try:
        towers = family_towers(label)
        members = [from_tower(t) for t in towers]
    except (CorruptionError, ValueError) as exc:
        return FamilyCheck(False, k, f"construction failed: {exc}")
    if len(set(members)) != len(members):
        return FamilyCheck(False, k, "members are not pairwise distinct")
    p = label.p
    for j, lam in enumerate(members):
        if sum(lam) != label.n or p_core(lam, p) != label.core:
            return FamilyCheck(False, k, f"lambda_{j} is not in the block")
        h = height_valuation(lam, label)
        if h != j:
            return FamilyCheck(False, k, f"lambda_{j} has height {h}, expected {j}")
    for j in range(1, len(towers)):
        lo, hi = k - j, k - j + 1
        prev, cur = towers[j - 1], towers[j]
        if cur.layer_size(lo) != prev.layer_size(lo) + p or cur.layer_size(hi) != prev.layer_size(hi) - 1:
            return FamilyCheck(False, k, f"size ledger fails at step {j}")
        others = [i for i in range(max(len(prev.layers), len(cur.layers))) if i not in (lo, hi)]
        if any(cur.layer_size(i) != prev.layer_size(i) for i in others):
            return FamilyCheck(False, k, f"step {j} touched a layer outside {lo}, {hi}")
    return FamilyCheck(True, k)
