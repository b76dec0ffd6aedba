"""Set partitions of {1..n}: enumeration, crossing statistics, Moebius functions.

Partitions are kept in canonical form (each block sorted, block list sorted by
least element) so equality, hashing and enumeration order are reproducible.
Three lattices are supported, all ordered by refinement: the full partition
lattice, the noncrossing lattice and the interval lattice.

Connectivity follows the crossing graph: two blocks are adjacent iff they
cross, and the connected components of a partition are the components of that
graph.  A partition is connected iff it has a single component, which is
equivalent to "no proper subinterval of {1..n} is a union of blocks".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, NamedTuple

__all__ = [
    "Partition",
    "LatticeKind",
    "PartitionFlags",
    "PartitionStats",
    "BoundExceededError",
    "LatticeOrderError",
    "LatticeMembershipError",
    "enumerate_partitions",
    "enumerate_pairings",
    "classify",
    "statistics",
    "count_connected_pairings",
    "moebius",
    "refines",
    "top_partition",
    "bottom_partition",
]

# Enumeration cutoffs; larger requests raise BoundExceededError naming the bound.
MAX_ENUM_ALL = 14
MAX_ENUM_NONCROSSING = 18
MAX_ENUM_INTERVAL = 24
MAX_ENUM_PAIRING = 14


class BoundExceededError(Exception):
    """An enumeration request exceeded the documented resource bound."""


class LatticeOrderError(ValueError):
    """Moebius query on a pair that is not comparable in the lattice."""


class LatticeMembershipError(ValueError):
    """Partition does not belong to the requested lattice."""


class LatticeKind(Enum):
    ALL = "all"
    NONCROSSING = "noncrossing"
    INTERVAL = "interval"


@dataclass(frozen=True)
class Partition:
    """A set partition of {1..n} in canonical block order."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        canon = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0]))
        object.__setattr__(self, "blocks", canon)
        seen: set[int] = set()
        for block in canon:
            if not block:
                raise ValueError("empty block")
            for x in block:
                if x in seen:
                    raise ValueError(f"element {x} repeated")
                seen.add(x)
        if seen != set(range(1, self.n + 1)):
            raise ValueError(f"blocks do not cover 1..{self.n}: {canon}")

    @classmethod
    def of(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(n, tuple(tuple(b) for b in blocks))

    def block_of(self, x: int) -> tuple[int, ...]:
        for block in self.blocks:
            if x in block:
                return block
        raise KeyError(x)

    def block_index(self) -> dict[int, int]:
        """Map element -> index of its block in canonical order."""
        out: dict[int, int] = {}
        for i, block in enumerate(self.blocks):
            for x in block:
                out[x] = i
        return out

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


class PartitionFlags(NamedTuple):
    connected: bool
    irreducible: bool
    noncrossing: bool
    interval: bool


class PartitionStats(NamedTuple):
    cc: int
    cr: int
    h: int
    ip: dict


def top_partition(n: int) -> Partition:
    return Partition.of(n, [range(1, n + 1)])


def bottom_partition(n: int, kind: LatticeKind = LatticeKind.ALL) -> Partition:
    # The singleton partition is the bottom of all three lattices.
    del kind
    return Partition.of(n, [[i] for i in range(1, n + 1)])


def _rgs_iter(n: int):
    """Restricted-growth strings of length n in lexicographic order."""
    assignment = [0] * n

    def rec(i: int, maxblock: int):
        if i == n:
            yield tuple(assignment)
            return
        for b in range(maxblock + 2):
            assignment[i] = b
            yield from rec(i + 1, max(maxblock, b))

    if n == 0:
        yield ()
    else:
        assignment[0] = 0
        yield from rec(1, 0)


def _partition_from_rgs(rgs: tuple[int, ...]) -> Partition:
    nblocks = max(rgs) + 1
    blocks: list[list[int]] = [[] for _ in range(nblocks)]
    for i, b in enumerate(rgs):
        blocks[b].append(i + 1)
    return Partition.of(len(rgs), blocks)


def enumerate_partitions(n: int, kind: LatticeKind = LatticeKind.ALL) -> list[Partition]:
    """All partitions of {1..n} of the given kind, in a fixed deterministic order.

    The order is lexicographic in the restricted-growth string of the
    partition.  Bounds: n <= 14 (ALL), n <= 18 (NONCROSSING), n <= 24
    (INTERVAL).
    """
    if n < 1:
        raise ValueError("n must be positive")
    bound = {
        LatticeKind.ALL: MAX_ENUM_ALL,
        LatticeKind.NONCROSSING: MAX_ENUM_NONCROSSING,
        LatticeKind.INTERVAL: MAX_ENUM_INTERVAL,
    }[kind]
    if n > bound:
        raise BoundExceededError(f"enumeration bound for {kind.value} partitions is n <= {bound}")
    out = []
    for rgs in _rgs_iter(n):
        p = _partition_from_rgs(rgs)
        if kind is LatticeKind.NONCROSSING and not _is_noncrossing(p):
            continue
        if kind is LatticeKind.INTERVAL and not _is_interval(p):
            continue
        out.append(p)
    return out


def enumerate_pairings(n: int) -> list[Partition]:
    """All pairings (perfect matchings) of {1..n}; empty for odd n.

    Count is (n-1)!! for even n.  Bound: n <= 14.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUM_PAIRING:
        raise BoundExceededError(f"pairing enumeration bound is n <= {MAX_ENUM_PAIRING}")
    if n % 2:
        return []

    out: list[Partition] = []
    pairs: list[tuple[int, int]] = []

    def rec(remaining: tuple[int, ...]):
        if not remaining:
            out.append(Partition.of(n, list(pairs)))
            return
        first = remaining[0]
        for j in range(1, len(remaining)):
            pairs.append((first, remaining[j]))
            rec(remaining[1:j] + remaining[j + 1 :])
            pairs.pop()

    rec(tuple(range(1, n + 1)))
    return out


def _blocks_cross(b1: tuple[int, ...], b2: tuple[int, ...]) -> bool:
    """True iff the two blocks interleave as a<b<c<d with a,c in one, b,d in the other."""
    if b1[-1] < b2[0] or b2[-1] < b1[0]:
        return False
    # Merge and count tag alternations; crossing <=> at least 4 runs.
    i = j = runs = 0
    last = None
    while i < len(b1) or j < len(b2):
        if j >= len(b2) or (i < len(b1) and b1[i] < b2[j]):
            tag = 0
            i += 1
        else:
            tag = 1
            j += 1
        if tag != last:
            runs += 1
            last = tag
            if runs >= 4:
                return True
    return False


def _components(p: Partition) -> list[list[int]]:
    """Connected components of the crossing graph, as lists of block indices."""
    k = len(p.blocks)
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(k):
        for j in range(i + 1, k):
            if _blocks_cross(p.blocks[i], p.blocks[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _is_noncrossing(p: Partition) -> bool:
    """Stack-based noncrossing test (independent of the crossing-graph machinery)."""
    owner = p.block_index()
    stack: list[int] = []
    maxima = {b[-1]: i for i, b in enumerate(p.blocks)}
    minima = {b[0]: i for i, b in enumerate(p.blocks)}
    for x in range(1, p.n + 1):
        b = owner[x]
        if stack and stack[-1] == b:
            if x == p.blocks[b][-1]:
                stack.pop()
            continue
        if minima.get(x) == b:
            if maxima.get(x) == b:
                continue  # singleton block
            stack.append(b)
            continue
        return False
    return True


def _is_interval(p: Partition) -> bool:
    return all(b[-1] - b[0] + 1 == len(b) for b in p.blocks)


def classify(p: Partition) -> PartitionFlags:
    """Connectivity/irreducibility/noncrossing/interval flags of a partition.

    connected: single crossing-graph component (equivalently no proper
    subinterval of {1..n} is a union of blocks); irreducible: 1 and n lie in
    the same component; noncrossing: no two blocks cross; interval: every
    block is an integer interval.  connected => irreducible and
    interval => noncrossing.
    """
    comps = _components(p)
    owner = p.block_index()
    comp_of_block: dict[int, int] = {}
    for ci, comp in enumerate(comps):
        for b in comp:
            comp_of_block[b] = ci
    connected = len(comps) == 1
    irreducible = comp_of_block[owner[1]] == comp_of_block[owner[p.n]]
    return PartitionFlags(
        connected=connected,
        irreducible=irreducible,
        noncrossing=_is_noncrossing(p),
        interval=_is_interval(p),
    )


def statistics(p: Partition) -> PartitionStats:
    """Crossing statistics of a partition.

    cc: number of crossing-graph components; cr: number of quadruples
    a<b<c<d with a,c in one block and b,d in a different block; h: number of
    components consisting of exactly one 2-element block; ip: per-block count
    of inner points (elements strictly between the block minimum and maximum
    that do not belong to the block).
    """
    comps = _components(p)
    owner = p.block_index()
    cr = 0
    for a, b, c, d in itertools.combinations(range(1, p.n + 1), 4):
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            cr += 1
    h = sum(1 for comp in comps if len(comp) == 1 and len(p.blocks[comp[0]]) == 2)
    ip: dict[tuple[int, ...], int] = {}
    for block in p.blocks:
        ip[block] = sum(1 for x in range(block[0] + 1, block[-1]) if x not in block)
    return PartitionStats(cc=len(comps), cr=cr, h=h, ip=ip)


def count_connected_pairings(two_n: int) -> int:
    """Number of connected pairings of {1..two_n}, by direct enumeration.

    These are the counts 1, 1, 4, 27, 248, 2830, ... (OEIS A000699) for
    two_n = 2, 4, 6, ...; the value is 1 for two_n = 0 and 0 for odd input.
    Bound: two_n <= 14.
    """
    if two_n == 0:
        return 1
    if two_n % 2:
        return 0
    if two_n > 14:
        raise BoundExceededError("connected-pairing count bound is two_n <= 14")
    return sum(1 for p in enumerate_pairings(two_n) if len(_components(p)) == 1)


def refines(sigma: Partition, pi: Partition) -> bool:
    """True iff every block of sigma is contained in a block of pi."""
    if sigma.n != pi.n:
        return False
    owner = pi.block_index()
    for block in sigma.blocks:
        target = owner[block[0]]
        if any(owner[x] != target for x in block[1:]):
            return False
    return True


def _member(kind: LatticeKind, p: Partition) -> bool:
    if kind is LatticeKind.ALL:
        return True
    if kind is LatticeKind.NONCROSSING:
        return _is_noncrossing(p)
    return _is_interval(p)


@lru_cache(maxsize=None)
def _lattice(kind: LatticeKind, n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(n, kind))


@lru_cache(maxsize=None)
def _moebius_cached(kind: LatticeKind, sigma: Partition, pi: Partition) -> int:
    if sigma == pi:
        return 1
    total = 0
    for tau in _lattice(kind, sigma.n):
        if tau != pi and refines(sigma, tau) and refines(tau, pi):
            total += _moebius_cached(kind, sigma, tau)
    return -total


def moebius(kind: LatticeKind, sigma: Partition, pi: Partition) -> int:
    """Moebius function mu(sigma, pi) of the chosen lattice, by zeta inversion.

    Computed recursively from mu(sigma, sigma) = 1 and
    sum over sigma <= tau <= pi of mu(sigma, tau) = 0, with memoisation.
    Raises LatticeMembershipError if either argument is not in the lattice
    and LatticeOrderError if sigma does not refine pi.
    """
    if sigma.n != pi.n:
        raise LatticeOrderError("partitions live on different ground sets")
    for q in (sigma, pi):
        if not _member(kind, q):
            raise LatticeMembershipError(f"{q} is not in the {kind.value} lattice")
    if not refines(sigma, pi):
        raise LatticeOrderError(f"{sigma} does not refine {pi}")
    return _moebius_cached(kind, sigma, pi)
