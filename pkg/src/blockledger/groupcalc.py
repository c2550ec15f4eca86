"""Brute-force finite groups: enumeration, derived and lower central series.

Elements are plain tuples: a permutation in array form, or an upper
unitriangular matrix flattened row by row. Products are read left to right,
``mul(a, b)`` meaning "a, then b" for permutations.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .partition import check_prime, digits, legendre

PERMUTATION_BUDGET = 2**15
MATRIX_BUDGET = 2**16
PAIRWISE_LIMIT = 4096


@dataclass(frozen=True)
class PermutationKind:
    degree: int

    def identity(self) -> tuple:
        return tuple(range(self.degree))

    def mul(self, a: tuple, b: tuple) -> tuple:
        return tuple(map(b.__getitem__, a))

    def inv(self, a: tuple) -> tuple:
        out = [0] * len(a)
        for i, x in enumerate(a):
            out[x] = i
        return tuple(out)

    def to_array(self, elements: Sequence[tuple]) -> np.ndarray:
        return np.asarray(elements, dtype=np.int16).reshape(len(elements), self.degree)

    def mul_batch(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.take_along_axis(b, a.astype(np.intp), axis=1)

    def inv_batch(self, a: np.ndarray) -> np.ndarray:
        out = np.empty_like(a)
        rows = np.arange(a.shape[0])[:, None]
        out[rows, a] = np.arange(a.shape[1], dtype=a.dtype)[None, :]
        return out


@dataclass(frozen=True)
class UnitriangularKind:
    n: int
    p: int

    def identity(self) -> tuple:
        n = self.n
        return tuple(int(i == j) for i in range(n) for j in range(n))

    def mul(self, a: tuple, b: tuple) -> tuple:
        n, p = self.n, self.p
        return tuple(
            sum(a[i * n + t] * b[t * n + j] for t in range(i, j + 1)) % p for i in range(n) for j in range(n)
        )

    def inv(self, a: tuple) -> tuple:
        # back substitution on an upper unitriangular matrix
        n, p = self.n, self.p
        x = [[int(i == j) for j in range(n)] for i in range(n)]
        for j in range(n):
            for i in range(j - 1, -1, -1):
                x[i][j] = -sum(a[i * n + t] * x[t][j] for t in range(i + 1, j + 1)) % p
        return tuple(v for row in x for v in row)

    def to_array(self, elements: Sequence[tuple]) -> np.ndarray:
        return np.asarray(elements, dtype=np.int64).reshape(len(elements), self.n * self.n)

    def mul_batch(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        n = self.n
        prod = np.matmul(a.reshape(-1, n, n), b.reshape(-1, n, n)) % self.p
        return prod.reshape(-1, n * n)

    def inv_batch(self, a: np.ndarray) -> np.ndarray:
        return self.to_array([self.inv(tuple(int(v) for v in row)) for row in a])


@dataclass
class FiniteGroup:
    """A subgroup given by generators, with all of its elements enumerated."""

    kind: object
    generators: list[tuple]
    elements: list[tuple] = field(repr=False)

    def __post_init__(self):
        self.index = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.index

    @property
    def identity(self) -> tuple:
        return self.kind.identity()

    def is_trivial(self) -> bool:
        return self.order == 1


def commutator(kind, a: tuple, b: tuple) -> tuple:
    """[a, b] = a^-1 b^-1 a b."""
    return kind.mul(kind.mul(kind.inv(a), kind.inv(b)), kind.mul(a, b))


def _extend(kind, elements: list[tuple], members: set, gens: Sequence[tuple], new: tuple) -> None:
    """Dimino step: grow the closure of ``gens`` (held in elements/members) to include ``new``."""
    old = list(elements)
    all_gens = list(gens) + [new]
    reps = [kind.identity()]
    i = 0
    while i < len(reps):
        r = reps[i]
        i += 1
        for s in all_gens:
            g = kind.mul(r, s)
            if g not in members:
                reps.append(g)
                for h in old:
                    x = kind.mul(h, g)
                    members.add(x)
                    elements.append(x)


def generate(kind, gens: Iterable[tuple], budget: int | None = None) -> FiniteGroup:
    """Enumerate the group generated by ``gens``, keeping only the generators that enlarge it."""
    identity = kind.identity()
    elements, members, kept = [identity], {identity}, []
    for g in gens:
        if g in members:
            continue
        _extend(kind, elements, members, kept, g)
        kept.append(g)
        if budget is not None and len(elements) > budget:
            raise ValueError(f"group exceeds the enumeration budget of {budget} elements")
    return FiniteGroup(kind, kept, elements)


def normal_closure(kind, seeds: Iterable[tuple], conjugators: Sequence[tuple]) -> FiniteGroup:
    """Smallest subgroup containing ``seeds`` and normalized by ``conjugators``."""
    identity = kind.identity()
    elements, members, kept = [identity], {identity}, []
    queue = deque(seeds)
    while queue:
        x = queue.popleft()
        if x in members:
            continue
        _extend(kind, elements, members, kept, x)
        kept.append(x)
        for g in conjugators:
            queue.append(kind.mul(kind.mul(kind.inv(g), x), g))
    return FiniteGroup(kind, kept, elements)


def _rows_as_keys(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    return arr.view(np.dtype((np.void, arr.dtype.itemsize * arr.shape[1]))).ravel()


def _pairwise_commutators(H: FiniteGroup, K: FiniteGroup) -> FiniteGroup:
    """<[h, k] : h in H, k in K> from every pair of elements."""
    kind = H.kind
    A, B = kind.to_array(H.elements), kind.to_array(K.elements)
    A_inv, B_inv = kind.inv_batch(A), kind.inv_batch(B)
    found: dict[bytes, np.ndarray] = {}
    for i in range(A.shape[0]):
        a = np.broadcast_to(A[i], B.shape)
        a_inv = np.broadcast_to(A_inv[i], B.shape)
        comm = kind.mul_batch(kind.mul_batch(a_inv, B_inv), kind.mul_batch(a, B))
        keys, first = np.unique(_rows_as_keys(comm), return_index=True)
        for key, j in zip(keys, first):
            kb = key.tobytes()
            if kb not in found:
                found[kb] = comm[j]
    comms = [tuple(int(v) for v in row) for row in found.values()]
    comms.sort()
    return generate(kind, comms)


def _same_subgroup(G: FiniteGroup, H: FiniteGroup) -> bool:
    return G.order == H.order and all(g in H for g in G.elements)


def commutator_subgroup(H: FiniteGroup, G: FiniteGroup, cross_check: bool = True) -> FiniteGroup:
    """[H, G] for H normal in G (H = G gives the derived subgroup).

    Small groups take every commutator pair; larger ones use the normal
    closure of commutators of generators. Both are run and compared when
    the pairwise route is affordable and ``cross_check`` is set.
    """
    kind = G.kind
    seeds = [commutator(kind, h, g) for h in H.generators for g in G.generators]
    closure = normal_closure(kind, seeds, G.generators)
    if cross_check and H.order * G.order <= PAIRWISE_LIMIT**2:
        brute = _pairwise_commutators(H, G)
        if not _same_subgroup(brute, closure):
            raise AssertionError("pairwise and normal-closure commutator subgroups disagree")
    return closure


def derived_series(G: FiniteGroup, cross_check: bool = True) -> list[FiniteGroup]:
    """G, G', G'', ... ending at the first repeated term (the trivial group for solvable G)."""
    series = [G]
    while not series[-1].is_trivial():
        nxt = commutator_subgroup(series[-1], series[-1], cross_check)
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
    return series


def lower_central_series(G: FiniteGroup, cross_check: bool = True) -> list[FiniteGroup]:
    series = [G]
    while not series[-1].is_trivial():
        nxt = commutator_subgroup(series[-1], G, cross_check)
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
    return series


def derived_length(G: FiniteGroup, cross_check: bool = True) -> int:
    series = derived_series(G, cross_check)
    if not series[-1].is_trivial():
        raise ValueError("group is not solvable")
    return len(series) - 1


def nilpotency_class(G: FiniteGroup, cross_check: bool = True) -> int:
    series = lower_central_series(G, cross_check)
    if not series[-1].is_trivial():
        raise ValueError("group is not nilpotent")
    return len(series) - 1


def _cycle_on(points: Sequence[int], degree: int) -> tuple:
    perm = list(range(degree))
    for i, x in enumerate(points):
        perm[x] = points[(i + 1) % len(points)]
    return tuple(perm)


def _wreath_generators(p: int, level: int, offset: int, degree: int) -> list[tuple]:
    """Generators of a Sylow p-subgroup of Sym(p**level) acting on offset .. offset + p**level - 1."""
    if level == 0:
        return []
    if level == 1:
        return [_cycle_on(range(offset, offset + p), degree)]
    block = p ** (level - 1)
    gens = _wreath_generators(p, level - 1, offset, degree)
    shift = list(range(degree))
    for x in range(p**level):
        shift[offset + x] = offset + (x + block) % (p**level)
    return gens + [tuple(shift)]


def sylow_generators(m: int, p: int) -> list[tuple]:
    offset, gens = 0, []
    for level, digit in enumerate(digits(m, p)):
        for _ in range(digit):
            gens += _wreath_generators(p, level, offset, m)
            offset += p**level
    return gens


@lru_cache(maxsize=32)
def sylow_symmetric(m: int, p: int) -> FiniteGroup:
    """Sylow p-subgroup of Sym(m): iterated wreath products on disjoint supports."""
    check_prime(p)
    expected = p ** legendre(m, p)
    if expected > PERMUTATION_BUDGET:
        raise ValueError(f"Sylow {p}-subgroup of Sym({m}) has order {expected}, over budget")
    G = generate(PermutationKind(m), sylow_generators(m, p), PERMUTATION_BUDGET)
    assert G.order == expected
    return G


def _parity(perm: tuple) -> int:
    seen, parity = [False] * len(perm), 0
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            parity ^= (length - 1) & 1
    return parity


def even_part(G: FiniteGroup) -> FiniteGroup:
    """G intersected with the alternating group, generated by Schreier generators."""
    kind = G.kind
    odd = next((g for g in G.generators if _parity(g)), None)
    if odd is None:
        return G
    reps = [kind.identity(), odd]

    def rep(x):
        return reps[_parity(x)]

    schreier = [kind.mul(kind.mul(r, s), kind.inv(rep(kind.mul(r, s)))) for r in reps for s in G.generators]
    H = generate(kind, schreier)
    assert 2 * H.order == G.order
    return H


@lru_cache(maxsize=16)
def unitriangular(n: int, p: int) -> FiniteGroup:
    """Full upper unitriangular group UT_n(F_p)."""
    check_prime(p)
    expected = p ** (n * (n - 1) // 2)
    if expected > MATRIX_BUDGET:
        raise ValueError(f"UT_{n}({p}) has order {expected}, over budget")
    kind = UnitriangularKind(n, p)
    gens = []
    for i in range(n - 1):
        for c in range(1, p):
            m = list(kind.identity())
            m[i * n + i + 1] = c
            gens.append(tuple(m))
    G = generate(kind, gens, MATRIX_BUDGET)
    assert G.order == expected
    return G


def conjugacy_classes(G: FiniteGroup) -> list[list[tuple]]:
    kind = G.kind
    seen: set = set()
    classes = []
    for g in G.elements:
        if g in seen:
            continue
        orbit, queue = [g], deque([g])
        seen.add(g)
        while queue:
            x = queue.popleft()
            for s in G.generators:
                y = kind.mul(kind.mul(kind.inv(s), x), s)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
                    queue.append(y)
        classes.append(orbit)
    return classes


def character_degrees(G: FiniteGroup, seed: int = 0) -> list[int]:
    """Irreducible character degrees, with multiplicity, by Burnside's class-sum method."""
    kind = G.kind
    classes = conjugacy_classes(G)
    r = len(classes)
    cls = {g: i for i, c in enumerate(classes) for g in c}
    sizes = np.array([len(c) for c in classes], dtype=float)
    # const[i, j, k] = #{x in C_i : x^-1 z_k in C_j} for a fixed z_k in C_k
    const = np.zeros((r, r, r))
    for k, c in enumerate(classes):
        z = c[0]
        for x in G.elements:
            const[cls[x], cls[kind.mul(kind.inv(x), z)], k] += 1
    e = cls[kind.identity()]
    rng = np.random.default_rng(seed)
    for _ in range(20):
        M = np.tensordot(rng.standard_normal(r), const, axes=1)
        _, vecs = np.linalg.eig(M)
        omegas = vecs / vecs[e, :]
        norms = (np.abs(omegas) ** 2 / sizes[:, None]).sum(axis=0)
        degs = np.sqrt(G.order / norms)
        rounded = np.rint(degs).astype(int)
        if np.allclose(degs, rounded, atol=1e-6) and int((rounded**2).sum()) == G.order:
            return sorted(int(d) for d in rounded)
    raise ArithmeticError("eigenvector separation failed")
