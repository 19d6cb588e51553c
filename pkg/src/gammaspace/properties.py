"""Named properties of a space, addressable from text.

A property is written ``name`` or ``name(arg, ...)`` where arguments are a
closed-set mode (``tau``/``gamma``) and, for subspace properties, a trace
convention (``max``/``min``).  Every property evaluates to a ``Verdict``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .finset import complement, expand, is_subset, members
from .gammatop import (
    Convention,
    finite_intersection_characterization,
    is_gamma0_compact,
    is_gamma_closed,
)
from .operations import (
    Space,
    is_open_operation,
    is_regular_operation,
    is_strictly_regular_operation,
)
from .separation import (
    ClosedMode,
    closed_family,
    has_shrinking_property,
    is_gamma_T1,
    is_gamma_T2,
    is_gammas_normal,
    is_gammas_regular,
)
from .subspace import TraceConvention, gamma_open_trace_family, induced_operation
from .verdict import Verdict, failed, passed


def singletons_gamma_closed(s: Space) -> Verdict:
    for x in range(s.n):
        if not is_gamma_closed(s, 1 << x, Convention.CLOSURE):
            return failed(x=x)
    return passed()


def all_subsets_gamma_closed(s: Space) -> Verdict:
    for a in range(1 << s.n):
        if not is_gamma_closed(s, a, Convention.CLOSURE):
            return failed(A=a)
    return passed()


def disjoint_opens_disjoint_values(s: Space) -> Verdict:
    """Disjoint opens always have disjoint gamma values."""
    pairs = list(zip(s.opens, s.values))
    for i, (u, gu) in enumerate(pairs):
        for v, gv in pairs[i:]:
            if u & v == 0 and gu & gv:
                return failed(U=u, V=v)
    return passed()


def _point_set_separation(s: Space, on_values: bool) -> Verdict:
    """Every nonempty proper ``C`` and ``x`` outside it admit opens ``U, V``
    with disjoint gamma values and ``x``, ``C`` inside either the gamma
    values (``on_values``) or the opens themselves."""
    pairs = list(zip(s.opens, s.values))
    cert = {}
    side = 1 if on_values else 0
    for c in range(1, s.full):
        for x in members(complement(c, s.n)):
            left = [p for p in pairs if p[side] >> x & 1]
            right = [p for p in pairs if is_subset(c, p[side])]
            found = next(
                ((u, v) for u, gu in left for v, gv in right if gu & gv == 0), None
            )
            if found is None:
                return failed(C=c, x=x)
            cert[(c, x)] = found
    return passed(cert)


def point_set_separation_values(s: Space) -> Verdict:
    return _point_set_separation(s, on_values=True)


def point_set_separation_opens(s: Space) -> Verdict:
    return _point_set_separation(s, on_values=False)


def _lift(witness: dict[str, int], y: int) -> dict[str, int]:
    points = list(members(y))
    out = {}
    for key, value in witness.items():
        out[key] = points[value] if key[:1].islower() else expand(value, y)
    return out


def subspaces_gs_regular(s: Space, mode: str, conv: str) -> Verdict:
    for y in range(1 << s.n):
        sub = induced_operation(s, y, conv)
        v = is_gammas_regular(sub, mode)
        if not v:
            return failed(Y=y, **_lift(v.witness, y))
    return passed()


def closed_subspaces_gs_normal(s: Space, mode: str, conv: str) -> Verdict:
    for y in closed_family(s, ClosedMode.TAU):
        sub = induced_operation(s, y, conv)
        v = is_gammas_normal(sub, mode)
        if not v:
            return failed(Y=y, **_lift(v.witness, y))
    return passed()


def trace_family_agrees(s: Space, conv: str) -> Verdict:
    """On every subspace, traces of gamma-opens equal the gamma-opens of the
    induced operation."""
    for y in range(1 << s.n):
        induced = induced_operation(s, y, conv).gamma_opens
        if set(gamma_open_trace_family(s, y)) != set(induced):
            return failed(Y=y)
    return passed()


# name -> (evaluator, takes mode, takes convention)
_REGISTRY: dict[str, tuple[Callable[..., Verdict], bool, bool]] = {
    "regular-op": (is_regular_operation, False, False),
    "strictly-regular-op": (is_strictly_regular_operation, False, False),
    "open-op": (is_open_operation, False, False),
    "gamma-t1": (is_gamma_T1, False, False),
    "gamma-t2": (is_gamma_T2, False, False),
    "gamma0-compact": (is_gamma0_compact, False, False),
    "finite-intersection": (finite_intersection_characterization, False, False),
    "gs-regular": (is_gammas_regular, True, False),
    "gs-normal": (is_gammas_normal, True, False),
    "shrinking": (has_shrinking_property, True, False),
    "singletons-gamma-closed": (singletons_gamma_closed, False, False),
    "all-subsets-gamma-closed": (all_subsets_gamma_closed, False, False),
    "disjoint-opens-disjoint-values": (disjoint_opens_disjoint_values, False, False),
    "point-set-separation-values": (point_set_separation_values, False, False),
    "point-set-separation-opens": (point_set_separation_opens, False, False),
    "subspaces-gs-regular": (subspaces_gs_regular, True, True),
    "closed-subspaces-gs-normal": (closed_subspaces_gs_normal, True, True),
    "trace-family-agrees": (trace_family_agrees, False, True),
}

PROPERTY_NAMES = tuple(_REGISTRY)

# properties that hold on every finite space by definition
AUTOMATIC = frozenset({"gamma0-compact", "finite-intersection"})


@dataclass(frozen=True)
class Prop:
    name: str
    mode: ClosedMode | None = None
    conv: TraceConvention | None = None

    def __post_init__(self):
        if self.name not in _REGISTRY:
            raise ValueError(f"unknown property {self.name!r}")
        _, wants_mode, wants_conv = _REGISTRY[self.name]
        if wants_mode and self.mode is None:
            object.__setattr__(self, "mode", ClosedMode.TAU)
        if wants_conv and self.conv is None:
            object.__setattr__(self, "conv", TraceConvention.MAX)
        if not wants_mode and self.mode is not None:
            raise ValueError(f"{self.name} takes no closed-set mode")
        if not wants_conv and self.conv is not None:
            raise ValueError(f"{self.name} takes no trace convention")
        if self.mode is not None:
            object.__setattr__(self, "mode", ClosedMode(self.mode))
        if self.conv is not None:
            object.__setattr__(self, "conv", TraceConvention(self.conv))

    def evaluate(self, s: Space) -> Verdict:
        fn, wants_mode, wants_conv = _REGISTRY[self.name]
        args = []
        if wants_mode:
            args.append(self.mode)
        if wants_conv:
            args.append(self.conv)
        return fn(s, *args)

    def __str__(self) -> str:
        args = [a.value for a in (self.mode, self.conv) if a is not None]
        return f"{self.name}({','.join(args)})" if args else self.name


_PROP_RE = re.compile(r"\s*([a-z0-9-]+)\s*(?:\(([^)]*)\))?\s*\Z")


def parse_prop(text: str, default_mode: str | None = None, default_conv: str | None = None) -> Prop:
    m = _PROP_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse property {text!r}")
    name, args = m.group(1), m.group(2)
    if name not in _REGISTRY:
        raise ValueError(f"unknown property {name!r}")
    _, wants_mode, wants_conv = _REGISTRY[name]
    mode = default_mode if wants_mode else None
    conv = default_conv if wants_conv else None
    for arg in (a.strip() for a in (args or "").split(",") if a.strip()):
        if arg in ("tau", "gamma") and wants_mode:
            mode = arg
        elif arg in ("max", "min") and wants_conv:
            conv = arg
        else:
            raise ValueError(f"bad argument {arg!r} for {name}")
    return Prop(name, mode, conv)
