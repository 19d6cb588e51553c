"""Finite carriers, bit-encoded subsets and finite topologies.

A subset of an ``n``-point carrier is a plain ``int`` whose bit ``i`` marks
membership of point ``i``.  Families of subsets are tuples sorted by the
numeric value of the encoding, which is the canonical order used everywhere.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    CarrierError,
    CarrierTooLarge,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
)

MAX_POINTS = 16
EXHAUSTIVE_LIMIT = 4


def full_set(n: int) -> int:
    return (1 << n) - 1


def members(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def complement(a: int, n: int) -> int:
    return full_set(n) & ~a


def compress(mask: int, carrier: int) -> int:
    """Re-index ``mask & carrier`` onto ``0..|carrier|-1``."""
    out = 0
    for j, i in enumerate(members(carrier)):
        if mask >> i & 1:
            out |= 1 << j
    return out


def expand(mask: int, carrier: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    for j, i in enumerate(members(carrier)):
        if mask >> j & 1:
            out |= 1 << i
    return out


def check_fits(mask: int, n: int) -> None:
    if mask < 0 or mask >> n:
        raise CarrierError(f"set {mask:#x} does not fit a {n}-point carrier")


def default_names(n: int) -> tuple[str, ...]:
    return tuple(string.ascii_lowercase[:n])


def format_set(mask: int, names: Sequence[str]) -> str:
    return "{" + " ".join(names[i] for i in members(mask)) + "}"


def canonical_family(sets: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(sets)))


@dataclass(frozen=True)
class Topology:
    """A validated finite topology.  Build through :func:`validate_topology`."""

    n: int
    opens: tuple[int, ...]
    names: tuple[str, ...] = field(default=(), compare=True)

    @property
    def full(self) -> int:
        return full_set(self.n)

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        return canonical_family(complement(u, self.n) for u in self.opens)

    @cached_property
    def nbhds(self) -> tuple[tuple[int, ...], ...]:
        """For each point, the positions in ``opens`` of the opens containing it."""
        return tuple(
            tuple(k for k, u in enumerate(self.opens) if u >> x & 1) for x in range(self.n)
        )

    def is_open(self, a: int) -> bool:
        return a in self.open_set

    def fmt(self, mask: int) -> str:
        return format_set(mask, self.names)

    def __repr__(self) -> str:
        body = ", ".join(self.fmt(u) for u in self.opens)
        return f"Topology(n={self.n}, opens=[{body}])"


def validate_topology(
    opens: Iterable[int], n: int, names: Sequence[str] | None = None
) -> Topology:
    if not 0 <= n <= MAX_POINTS:
        raise CarrierError(f"carrier size {n} outside 0..{MAX_POINTS}")
    family = canonical_family(opens)
    for u in family:
        check_fits(u, n)
    top = full_set(n)
    for required in (0, top):
        if required not in family:
            raise MissingEmptyOrFull(required)
    members_ = frozenset(family)
    for u, v in combinations(family, 2):
        if u | v not in members_:
            raise NotClosedUnderUnion(u, v)
        if u & v not in members_:
            raise NotClosedUnderIntersection(u, v)
    if names is None:
        names = default_names(n)
    names = tuple(names)
    if len(names) != n or len(set(names)) != n:
        raise CarrierError(f"need {n} distinct point names, got {names!r}")
    return Topology(n, family, names)


def discrete(n: int) -> Topology:
    return validate_topology(range(1 << n), n)


def indiscrete(n: int) -> Topology:
    return validate_topology({0, full_set(n)}, n)


def interior(t: Topology, a: int) -> int:
    """Largest open subset of ``a``."""
    out = 0
    for u in t.opens:
        if u & ~a == 0:
            out |= u
    return out


def closure(t: Topology, a: int) -> int:
    """Smallest closed superset of ``a``."""
    return complement(interior(t, complement(a, t.n)), t.n)


def _preorders(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every preorder on ``n`` points as per-point up-set masks."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for code in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                up[i] |= 1 << j
        # transitive iff each up-set is closed under the up-sets of its members
        if all(
            all(is_subset(up[j], up[i]) for j in members(up[i])) for i in range(n)
        ):
            yield tuple(up)


def _upsets(up: tuple[int, ...], n: int) -> tuple[int, ...]:
    return tuple(
        a
        for a in range(1 << n)
        if all(is_subset(up[i], a) for i in members(a))
    )


def enumerate_topologies(n: int, limit: int = EXHAUSTIVE_LIMIT) -> Iterator[Topology]:
    """Yield every labelled topology on ``n`` points in canonical order.

    Finite topologies correspond one-to-one with preorders (the open sets
    are the up-sets of the specialization preorder), so the search runs over
    relations instead of over families of subsets.
    """
    if n < 1:
        raise CarrierError("carrier must have at least one point")
    if n > limit:
        raise CarrierTooLarge(f"exhaustive enumeration capped at {limit} points, got {n}")
    families = sorted(_upsets(up, n) for up in _preorders(n))
    names = default_names(n)
    for fam in families:
        yield Topology(n, fam, names)


def subspace_topology(t: Topology, y: int) -> Topology:
    """Trace topology on ``y``, re-indexed onto ``0..|y|-1``."""
    check_fits(y, t.n)
    opens = canonical_family(compress(u & y, y) for u in t.opens)
    names = tuple(t.names[i] for i in members(y))
    return Topology(y.bit_count(), opens, names)
