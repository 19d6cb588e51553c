"""Structures derived from an operation: gamma-interior, gamma-closure,
gamma-open sets, gamma-closedness and gamma_0-compactness."""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Sequence

from .errors import NotAGammaOpenCover
from .finset import complement, is_subset, members
from .operations import Space
from .verdict import Verdict, failed, passed


class Convention(str, Enum):
    COMPLEMENT = "complement"
    CLOSURE = "closure"


def gamma_interior(s: Space, a: int) -> int:
    """Points of ``a`` having an open nbd whose gamma value lies inside ``a``."""
    out = 0
    for x in members(a):
        if any(gv & ~a == 0 for _, gv in s.nbhd_values[x]):
            out |= 1 << x
    return out


def gamma_closure(s: Space, a: int) -> int:
    """Points every open nbd of which has a gamma value meeting ``a``."""
    out = 0
    for x in range(s.n):
        if all(gv & a for _, gv in s.nbhd_values[x]):
            out |= 1 << x
    return out


def gamma_open_family(s: Space) -> tuple[int, ...]:
    return tuple(a for a in range(1 << s.n) if gamma_interior(s, a) == a)


def gamma_closed_family(s: Space) -> tuple[int, ...]:
    return tuple(sorted(complement(a, s.n) for a in s.gamma_opens))


def is_gamma_closed(
    s: Space, a: int, convention: Convention | str = Convention.CLOSURE
) -> Verdict:
    convention = Convention(convention)
    if convention is Convention.COMPLEMENT:
        rest = complement(a, s.n)
        inner = gamma_interior(s, rest)
        if inner == rest:
            return passed(rest)
        # a point of X - A that is not a gamma-interior point
        return failed(x=next(members(rest & ~inner)))
    cl = gamma_closure(s, a)
    if is_subset(cl, a):
        return passed(cl)
    return failed(x=next(members(cl & ~a)))


def _closure_union(s: Space, family: Sequence[int]) -> int:
    out = 0
    for v in family:
        out |= gamma_closure(s, v)
    return out


def minimal_closure_subcover(s: Space, cover: Sequence[int]) -> tuple[int, ...]:
    """Smallest sub-family of a gamma-open cover whose gamma-closures cover X.

    Sizes are tried in increasing order and, within a size, sub-families in
    lexicographic order of the canonically sorted cover.
    """
    family = tuple(sorted(set(cover)))
    gamma_open = set(s.gamma_opens)
    for v in family:
        if v not in gamma_open:
            raise NotAGammaOpenCover(member=v)
    union = 0
    for v in family:
        union |= v
    if union != s.full:
        raise NotAGammaOpenCover(point=next(members(s.full & ~union)))
    closures = {v: gamma_closure(s, v) for v in family}
    for size in range(1, len(family) + 1):
        for sub in combinations(family, size):
            got = 0
            for v in sub:
                got |= closures[v]
            if got == s.full:
                return sub
    # an empty carrier is covered by the empty sub-family
    return ()


def irredundant_covers(family: Sequence[int], full: int, max_size: int):
    """Yield covers drawn from ``family`` from which no member can be dropped."""
    pool = [v for v in family if v]
    for size in range(1, max_size + 1):
        for sub in combinations(pool, size):
            union = 0
            for v in sub:
                union |= v
            if union != full:
                continue
            if all(
                _union(sub[:i] + sub[i + 1:]) != full for i in range(size)
            ):
                yield sub


def _union(sets) -> int:
    out = 0
    for v in sets:
        out |= v
    return out


def is_gamma0_compact(s: Space) -> Verdict:
    """Check every irredundant gamma-open cover has a closure subcover.

    An irredundant cover has a private point per member, so at most ``n``
    members.  Certificate maps each scanned cover to a minimum subcover.
    """
    cert = {}
    for cover in irredundant_covers(s.gamma_opens, s.full, s.n):
        if _closure_union(s, cover) != s.full:
            return failed(X=_union(cover))
        cert[cover] = minimal_closure_subcover(s, cover)
    return passed(cert)


def finite_intersection_characterization(
    s: Space, reading: str = "clopen", size_cap: int = 4
) -> Verdict:
    """Scan families of gamma-open/gamma-closed sets with empty intersection.

    ``reading="clopen"`` draws members that are both gamma-open and
    gamma-closed; ``reading="mixed"`` draws members that are either.  Every
    family with empty intersection must contain a (here: minimum) finite
    subfamily with empty intersection; the certificate maps each such family
    to one.
    """
    opens = set(s.gamma_opens)
    closeds = set(gamma_closed_family(s))
    if reading == "clopen":
        pool = sorted(opens & closeds)
    elif reading == "mixed":
        pool = sorted(opens | closeds)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    cert = {}
    for size in range(1, min(size_cap, len(pool)) + 1):
        for fam in combinations(pool, size):
            if _meet(fam, s.full):
                continue
            sub = _min_empty_subfamily(fam, s.full)
            if sub is None:
                return failed(X=fam[0])
            cert[fam] = sub
    return passed(cert)


def _meet(sets, full: int) -> int:
    out = full
    for v in sets:
        out &= v
    return out


def _min_empty_subfamily(fam, full):
    for size in range(1, len(fam) + 1):
        for sub in combinations(fam, size):
            if _meet(sub, full) == 0:
                return sub
    return None
