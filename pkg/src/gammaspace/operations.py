"""The operation gamma: rules, explicit tables, spaces and operation classes.

An operation assigns to every open set ``V`` a superset ``V^gamma``.  It is
stored as a table aligned with ``Topology.opens``; rules are only a compact
way to produce such tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Mapping, Sequence

from .errors import ExtraEntry, MissingEntry, NotExpansive, RuleError
from .finset import Topology, check_fits, closure, format_set, interior, is_subset
from .verdict import Verdict, failed, passed

MAX_RULE_DEPTH = 4


class Rule:
    """Base class of rule expressions evaluated on open sets."""

    def apply(self, t: Topology, v: int) -> int:
        raise NotImplementedError

    def text(self, names: Sequence[str]) -> str:
        raise NotImplementedError

    @property
    def depth(self) -> int:
        return 0

    def points(self) -> set[int]:
        return set()


@dataclass(frozen=True)
class Identity(Rule):
    def apply(self, t, v):
        return v

    def text(self, names):
        return "identity"


@dataclass(frozen=True)
class Closure(Rule):
    def apply(self, t, v):
        return closure(t, v)

    def text(self, names):
        return "closure"


@dataclass(frozen=True)
class IntClosure(Rule):
    def apply(self, t, v):
        return interior(t, closure(t, v))

    def text(self, names):
        return "intclosure"


@dataclass(frozen=True)
class ClIntCl(Rule):
    def apply(self, t, v):
        return closure(t, interior(t, closure(t, v)))

    def text(self, names):
        return "clintcl"


@dataclass(frozen=True)
class IfContains(Rule):
    """``then`` on opens containing ``point``, ``other`` on the rest."""

    point: int
    then: Rule
    other: Rule

    def apply(self, t, v):
        branch = self.then if v >> self.point & 1 else self.other
        return branch.apply(t, v)

    def text(self, names):
        return (
            f"if-contains {names[self.point]} then {self.then.text(names)}"
            f" else {self.other.text(names)}"
        )

    @property
    def depth(self):
        return 1 + max(self.then.depth, self.other.depth)

    def points(self):
        return {self.point} | self.then.points() | self.other.points()


@dataclass(frozen=True)
class Explicit(Rule):
    entries: tuple[tuple[int, int], ...]

    def apply(self, t, v):
        return dict(self.entries)[v]

    def text(self, names):
        return "explicit"


LEAF_RULES: tuple[Rule, ...] = (Identity(), Closure(), IntClosure(), ClIntCl())


@dataclass(frozen=True)
class OperationTable:
    topology: Topology
    values: tuple[int, ...]
    rule: Rule | None = None

    @cached_property
    def entries(self) -> dict[int, int]:
        return dict(zip(self.topology.opens, self.values))

    def __getitem__(self, open_set: int) -> int:
        return self.entries[open_set]


def validate_operation(
    t: Topology, entries: Mapping[int, int], rule: Rule | None = None
) -> OperationTable:
    for key in sorted(entries):
        if not t.is_open(key):
            raise ExtraEntry(key)
    values = []
    for u in t.opens:
        if u not in entries:
            raise MissingEntry(u)
        value = entries[u]
        check_fits(value, t.n)
        if not is_subset(u, value):
            raise NotExpansive(u, value)
        values.append(value)
    return OperationTable(t, tuple(values), rule)


def build_operation(t: Topology, rule: Rule) -> OperationTable:
    if rule.depth > MAX_RULE_DEPTH:
        raise RuleError(f"rule nesting depth {rule.depth} exceeds {MAX_RULE_DEPTH}")
    bad = [p for p in rule.points() if not 0 <= p < t.n]
    if bad:
        raise RuleError(f"rule references point index {min(bad)} outside the carrier")
    if isinstance(rule, Explicit):
        return validate_operation(t, dict(rule.entries))
    return validate_operation(t, {u: rule.apply(t, u) for u in t.opens}, rule)


@dataclass(frozen=True)
class Space:
    topology: Topology
    gamma: OperationTable
    name: str = "X"

    def __post_init__(self):
        if self.gamma.topology != self.topology:
            raise ValueError("operation is defined over a different topology")

    @property
    def n(self) -> int:
        return self.topology.n

    @property
    def full(self) -> int:
        return self.topology.full

    @property
    def opens(self) -> tuple[int, ...]:
        return self.topology.opens

    @property
    def values(self) -> tuple[int, ...]:
        return self.gamma.values

    @cached_property
    def nbhd_values(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per point, the ``(open, gamma value)`` pairs of its open nbds."""
        opens, values = self.topology.opens, self.gamma.values
        return tuple(
            tuple((opens[k], values[k]) for k in ks) for ks in self.topology.nbhds
        )

    @cached_property
    def gamma_opens(self) -> tuple[int, ...]:
        from .gammatop import gamma_open_family

        return gamma_open_family(self)

    def fmt(self, mask: int) -> str:
        return format_set(mask, self.topology.names)

    def rule_text(self) -> str:
        rule = self.gamma.rule
        return "explicit" if rule is None else rule.text(self.topology.names)


def make_space(t: Topology, rule: Rule, name: str = "X") -> Space:
    return Space(t, build_operation(t, rule), name)


def _regularity(s: Space, strict: bool) -> Verdict:
    cert = {}
    for x, nbhd in enumerate(s.nbhd_values):
        for (u, gu), (v, gv) in combinations_with_replacement(nbhd, 2):
            meet = gu & gv
            for w, gw in nbhd:
                if gw == meet if strict else is_subset(gw, meet):
                    cert[(x, u, v)] = w
                    break
            else:
                return failed(x=x, U=u, V=v)
    return passed(cert)


def is_regular_operation(s: Space) -> Verdict:
    """Certificate maps ``(x, U, V)`` to an open ``W`` with ``W^g <= U^g & V^g``."""
    return _regularity(s, strict=False)


def is_strictly_regular_operation(s: Space) -> Verdict:
    """Like :func:`is_regular_operation` but with ``W^g == U^g & V^g``."""
    return _regularity(s, strict=True)


def is_open_operation(s: Space) -> Verdict:
    gamma_open = set(s.gamma_opens)
    for u, gu in zip(s.opens, s.values):
        if gu not in gamma_open:
            return failed(V=u)
    return passed(tuple(zip(s.opens, s.values)))
