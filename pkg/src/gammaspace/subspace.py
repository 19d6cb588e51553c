"""Operations induced on subspaces.

The induced value of a subspace open ``G`` is built from the ambient opens
whose trace on ``Y`` is ``G``:

* ``max``: the gamma value of the largest such open, traced on ``Y``;
* ``min``: the intersection of the traced gamma values of all of them.
"""

from __future__ import annotations

from enum import Enum

from .finset import check_fits, compress, subspace_topology
from .operations import Space, validate_operation


class TraceConvention(str, Enum):
    MAX = "max"
    MIN = "min"


def induced_operation(
    s: Space, y: int, convention: TraceConvention | str = TraceConvention.MAX
) -> Space:
    convention = TraceConvention(convention)
    check_fits(y, s.n)
    sub = subspace_topology(s.topology, y)
    largest: dict[int, int] = {}
    meet: dict[int, int] = {}
    for u, gu in zip(s.opens, s.values):
        g = compress(u & y, y)
        largest[g] = largest.get(g, 0) | u
        meet[g] = meet.get(g, sub.full) & compress(gu, y)
    if convention is TraceConvention.MAX:
        entries = {g: compress(s.gamma[u], y) for g, u in largest.items()}
    else:
        entries = meet
    table = validate_operation(sub, entries)
    return Space(sub, table, f"{s.name}|{s.fmt(y)}")


def gamma_open_trace_family(s: Space, y: int) -> tuple[int, ...]:
    """Traces of the ambient gamma-open sets on ``y``, in subspace indices."""
    check_fits(y, s.n)
    return tuple(sorted({compress(a & y, y) for a in s.gamma_opens}))
