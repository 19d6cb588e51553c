"""Separation axioms relative to an operation, with witness extraction.

Witnesses are the first violating configuration in canonical order (points
by index, sets by bit encoding), so results never depend on scan strategy.
"""

from __future__ import annotations

from enum import Enum

from .finset import complement, is_subset, members
from .gammatop import gamma_closure
from .operations import Space
from .verdict import Verdict, failed, passed


class ClosedMode(str, Enum):
    TAU = "tau"
    GAMMA = "gamma"


def closed_family(s: Space, mode: ClosedMode | str = ClosedMode.TAU) -> tuple[int, ...]:
    mode = ClosedMode(mode)
    source = s.opens if mode is ClosedMode.TAU else s.gamma_opens
    return tuple(sorted(complement(u, s.n) for u in source))


def _supersets(s: Space, a: int) -> list[tuple[int, int]]:
    return [(u, gu) for u, gu in zip(s.opens, s.values) if is_subset(a, u)]


def _separate(left, right):
    """First ``(U, V)`` from the two candidate lists with disjoint gamma values."""
    for u, gu in left:
        for v, gv in right:
            if gu & gv == 0:
                return u, v
    return None


def is_gamma_T2(s: Space) -> Verdict:
    """Certificate maps each pair ``(x, y)``, ``x < y``, to separating ``(U, V)``."""
    cert = {}
    for x in range(s.n):
        for y in range(x + 1, s.n):
            found = _separate(s.nbhd_values[x], s.nbhd_values[y])
            if found is None:
                return failed(x=x, y=y)
            cert[(x, y)] = found
    return passed(cert)


def is_gamma_T1(s: Space) -> Verdict:
    """Certificate maps each ordered pair ``(x, y)`` to an open ``U`` with
    ``x in U`` and ``y`` outside ``U^gamma``."""
    cert = {}
    for x in range(s.n):
        for y in range(s.n):
            if x == y:
                continue
            for u, gu in s.nbhd_values[x]:
                if not gu >> y & 1:
                    cert[(x, y)] = u
                    break
            else:
                return failed(x=x, y=y)
    return passed(cert)


def is_gammas_regular(s: Space, mode: ClosedMode | str = ClosedMode.TAU) -> Verdict:
    cert = {}
    for a in closed_family(s, mode):
        around = _supersets(s, a)
        for x in members(complement(a, s.n)):
            found = _separate(s.nbhd_values[x], around)
            if found is None:
                return failed(A=a, x=x)
            cert[(a, x)] = found
    return passed(cert)


def is_gammas_normal(s: Space, mode: ClosedMode | str = ClosedMode.TAU) -> Verdict:
    """Pairs are scanned with ``A <= B`` numerically; the condition is symmetric."""
    closed = closed_family(s, mode)
    around = {a: _supersets(s, a) for a in closed}
    cert = {}
    for i, a in enumerate(closed):
        for b in closed[i:]:
            if a & b:
                continue
            found = _separate(around[a], around[b])
            if found is None:
                return failed(A=a, B=b)
            cert[(a, b)] = found
    return passed(cert)


def has_shrinking_property(s: Space, mode: ClosedMode | str = ClosedMode.TAU) -> Verdict:
    """For closed ``A`` inside open ``U``: some open ``V`` with
    ``A <= V <= cl_gamma(V^gamma) <= U^gamma``."""
    cert = {}
    shrink = {v: gamma_closure(s, gv) for v, gv in zip(s.opens, s.values)}
    for a in closed_family(s, mode):
        around = _supersets(s, a)
        for u, gu in around:
            for v, _ in around:
                if is_subset(v, shrink[v]) and is_subset(shrink[v], gu):
                    cert[(a, u)] = v
                    break
            else:
                return failed(A=a, U=u)
    return passed(cert)
