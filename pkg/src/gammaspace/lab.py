"""Exhaustive checking of implications between properties.

Every (topology, operation) pair in scope is an *instance*.  Instances are
keyed ``(n, topology index, operation index)`` and that key order is the
canonical order: the reported counterexample is always the key-minimal one,
whatever the number of worker processes.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import ScopeTooLarge
from .finset import EXHAUSTIVE_LIMIT, Topology, complement, enumerate_topologies
from .operations import (
    LEAF_RULES,
    IfContains,
    OperationTable,
    Rule,
    Space,
    build_operation,
    validate_operation,
)
from .properties import AUTOMATIC, Prop, parse_prop
from .separation import ClosedMode
from .spacefile import parse_space_file, render_space
from .subspace import TraceConvention
from .verdict import render_witness

ALL_TABLES_LIMIT = 2


def catalog_rules(n: int) -> tuple[Rule, ...]:
    """Leaf rules, then every one-level conditional over distinct leaves."""
    conditionals = tuple(
        IfContains(p, then, other)
        for p in range(n)
        for then in LEAF_RULES
        for other in LEAF_RULES
        if then != other
    )
    return LEAF_RULES + conditionals


def catalog_operations(t: Topology) -> list[OperationTable]:
    """Catalog tables on ``t``; a rule whose table repeats an earlier one is dropped."""
    seen = set()
    out = []
    for rule in catalog_rules(t.n):
        table = build_operation(t, rule)
        if table.values not in seen:
            seen.add(table.values)
            out.append(table)
    return out


def all_operations(t: Topology) -> Iterator[OperationTable]:
    """Every expansive table on ``t``."""
    choices = []
    for u in t.opens:
        rest = complement(u, t.n)
        choices.append([u | s for s in range(1 << t.n) if s & ~rest == 0])
    for values in product(*choices):
        yield validate_operation(t, dict(zip(t.opens, values)))


@dataclass(frozen=True)
class Scope:
    sizes: tuple[int, ...]
    ops: str = "catalog"

    def __post_init__(self):
        if self.ops not in ("catalog", "all"):
            raise ValueError(f"unknown operation source {self.ops!r}")

    @classmethod
    def upto(cls, n: int, ops: str = "catalog") -> "Scope":
        return cls(tuple(range(1, n + 1)), ops)

    def validate(self, limit: int = EXHAUSTIVE_LIMIT) -> None:
        top = max(self.sizes)
        if top > limit:
            raise ScopeTooLarge(f"scope reaches {top} points; exhaustive limit is {limit}")
        if self.ops == "all" and top > ALL_TABLES_LIMIT:
            raise ScopeTooLarge(
                f"all-tables mode is limited to {ALL_TABLES_LIMIT} points, got {top}"
            )

    def __str__(self) -> str:
        lo, hi = min(self.sizes), max(self.sizes)
        sizes = f"n={lo}" if lo == hi else f"n={lo}..{hi}"
        return f"{sizes} {self.ops}"


@dataclass(frozen=True)
class Implication:
    name: str
    hypotheses: tuple[Prop, ...]
    conclusion: Prop

    def __str__(self) -> str:
        hyp = " & ".join(map(str, self.hypotheses)) or "true"
        return f"{hyp} => {self.conclusion}"


def parse_implication(
    text: str, default_mode: str | None = None, default_conv: str | None = None
) -> Implication:
    if text.count("=>") != 1:
        raise ValueError("implication needs exactly one '=>'")
    left, right = text.split("=>")
    hyps = tuple(
        parse_prop(a, default_mode, default_conv) for a in left.split("&") if a.strip()
    )
    concl = parse_prop(right, default_mode, default_conv)
    imp = Implication("", hyps, concl)
    return Implication(str(imp), hyps, concl)


@dataclass(frozen=True)
class Counterexample:
    key: tuple[int, int, int]
    space: Space
    witness: dict[str, int]

    def render(self) -> str:
        s = self.space
        opens = " ".join(s.fmt(u) for u in s.opens)
        if s.gamma.rule is None:
            gamma = "[" + " ".join(f"{s.fmt(u)}->{s.fmt(v)}" for u, v in zip(s.opens, s.values)) + "]"
        else:
            gamma = s.rule_text()
        return (
            f"T{self.key[0]}.{self.key[1]}.{self.key[2]} opens=[{opens}] gamma={gamma} :: "
            f"{render_witness(self.witness, s.topology.names)}"
        )


@dataclass
class Row:
    implication: Implication
    scope: Scope
    total: int = 0
    scanned: int = 0
    counterexamples: int = 0
    first: Counterexample | None = None
    elapsed: float = 0.0
    note: str = ""

    @property
    def skipped(self) -> int:
        return self.total - self.scanned

    @property
    def holds(self) -> bool:
        return self.counterexamples == 0

    def merge(self, other: "Row") -> None:
        self.total += other.total
        self.scanned += other.scanned
        self.counterexamples += other.counterexamples
        self.elapsed += other.elapsed
        if other.first is not None and (self.first is None or other.first.key < self.first.key):
            self.first = other.first


@dataclass
class LabReport:
    title: str
    rows: list[Row] = field(default_factory=list)

    def render(self, timing: bool = True) -> str:
        header = ["name", "scope", "instances", "verdict", "witness"]
        if timing:
            header.append("ms")
        table = [header]
        for row in self.rows:
            verdict = (
                "no counterexample"
                if row.holds
                else f"COUNTEREXAMPLE ({row.counterexamples} instances)"
            )
            witness = row.first.render() if row.first else "-"
            line = [
                row.implication.name,
                str(row.scope),
                f"{row.scanned} scanned + {row.skipped} skipped = {row.total}",
                verdict,
                witness,
            ]
            if timing:
                line.append(f"{row.elapsed * 1000:.0f}")
            table.append(line)
        widths = [max(len(r[i]) for r in table) for i in range(len(header) - 1)]
        out = [f"# {self.title}"]
        for r in table:
            cells = [c.ljust(w) for c, w in zip(r, widths)] + r[len(widths):]
            out.append(" | ".join(cells).rstrip())
        notes = [
            f"- {row.implication.name}: {row.note}" for row in self.rows if row.note
        ]
        automatic = sorted(
            {
                str(p)
                for row in self.rows
                for p in row.implication.hypotheses + (row.implication.conclusion,)
                if p.name in AUTOMATIC
            }
        )
        if automatic:
            notes.append(
                "- " + ", ".join(automatic)
                + ": holds automatically on finite carriers (every cover is finite)"
            )
        if notes:
            out.append("")
            out.append("notes:")
            out.extend(notes)
        return "\n".join(out) + "\n"


@lru_cache(maxsize=None)
def _topologies(n: int) -> tuple[Topology, ...]:
    return tuple(enumerate_topologies(n, limit=max(n, EXHAUSTIVE_LIMIT)))


def _operations(t: Topology, ops: str) -> Iterable[OperationTable]:
    return catalog_operations(t) if ops == "catalog" else all_operations(t)


def instances(scope: Scope) -> Iterator[tuple[tuple[int, int, int], Space]]:
    """All instances of ``scope`` in canonical order."""
    for n in scope.sizes:
        for ti, t in enumerate(_topologies(n)):
            for oi, table in enumerate(_operations(t, scope.ops)):
                yield (n, ti, oi), Space(t, table, f"T{n}.{ti}.{oi}")


def _scan_chunk(
    implications: Sequence[Implication], scope: Scope, n: int, indices: Sequence[int]
) -> list[Row]:
    rows = [Row(imp, scope) for imp in implications]
    topologies = _topologies(n)
    for ti in indices:
        t = topologies[ti]
        for oi, table in enumerate(_operations(t, scope.ops)):
            space = Space(t, table, f"T{n}.{ti}.{oi}")
            memo: dict[Prop, object] = {}

            def evaluate(p: Prop):
                if p not in memo:
                    memo[p] = p.evaluate(space)
                return memo[p]

            for row in rows:
                start = time.perf_counter()
                row.total += 1
                if all(evaluate(h) for h in row.implication.hypotheses):
                    row.scanned += 1
                    verdict = evaluate(row.implication.conclusion)
                    if not verdict:
                        row.counterexamples += 1
                        if row.first is None:
                            row.first = Counterexample((n, ti, oi), space, verdict.witness)
                row.elapsed += time.perf_counter() - start
    return rows


def scan(
    implications: Sequence[Implication],
    scope: Scope,
    workers: int = 1,
    limit: int = EXHAUSTIVE_LIMIT,
) -> list[Row]:
    """Evaluate every implication on every instance of ``scope``.

    Work is split by topology index; partial rows are merged by summing
    counts and keeping the key-minimal counterexample.
    """
    scope.validate(limit)
    chunks = []
    for n in scope.sizes:
        count = len(_topologies(n))
        step = max(1, -(-count // max(1, workers * 4)))
        chunks += [(n, range(i, min(i + step, count))) for i in range(0, count, step)]
    merged = [Row(imp, scope) for imp in implications]
    if workers <= 1:
        parts = [_scan_chunk(implications, scope, n, idx) for n, idx in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_scan_chunk, implications, scope, n, list(idx)) for n, idx in chunks
            ]
            parts = [f.result() for f in futures]
    for part in parts:
        for row, sub in zip(merged, part):
            row.merge(sub)
    return merged


def check_implication(
    imp: Implication, scope: Scope, workers: int = 1, limit: int = EXHAUSTIVE_LIMIT
) -> LabReport:
    report = LabReport(f"implication check, {scope}")
    report.rows = scan([imp], scope, workers, limit)
    return report


def revalidate(imp: Implication, cx: Counterexample) -> bool:
    """Re-run a counterexample from its text form alone."""
    space = parse_space_file(render_space(cx.space))
    if not all(h.evaluate(space) for h in imp.hypotheses):
        return False
    verdict = imp.conclusion.evaluate(space)
    return not verdict and verdict.witness == cx.witness


def _p(name: str, mode=None, conv=None) -> Prop:
    return Prop(name, mode, conv)


def theorem_implications(
    modes: Sequence[ClosedMode | str] = tuple(ClosedMode),
    convs: Sequence[TraceConvention | str] = tuple(TraceConvention),
) -> list[tuple[Implication, str]]:
    """The theorem rows, each with an explanatory note (possibly empty)."""
    modes = [ClosedMode(m) for m in modes]
    convs = [TraceConvention(c) for c in convs]
    t2_reg_open = (_p("gamma-t2"), _p("regular-op"), _p("open-op"))
    rows: list[tuple[Implication, str]] = [
        (
            Implication(
                "theorem-1", t2_reg_open + (_p("gamma0-compact"),),
                _p("point-set-separation-values"),
            ),
            "x in U^gamma, C <= V^gamma, disjoint gamma values; C nonempty proper",
        ),
        (
            Implication(
                "theorem-1-alt", t2_reg_open + (_p("gamma0-compact"),),
                _p("point-set-separation-opens"),
            ),
            "alternate form: x in U, C <= V, disjoint gamma values",
        ),
        (
            Implication(
                "theorem-2", t2_reg_open + (_p("gamma0-compact"),),
                _p("all-subsets-gamma-closed"),
            ),
            "",
        ),
    ]
    for mode in modes:
        for conv in convs:
            rows.append((
                Implication(
                    f"theorem-3[{mode.value},{conv.value}]",
                    (_p("regular-op"), _p("gs-regular", mode)),
                    _p("subspaces-gs-regular", mode, conv),
                ),
                "",
            ))
    for mode in modes:
        sr_open = (_p("open-op"), _p("strictly-regular-op"))
        rows.append((
            Implication(
                f"theorem-4[{mode.value}]",
                sr_open + (_p("shrinking", mode),),
                _p("gs-normal", mode),
            ),
            "",
        ))
        rows.append((
            Implication(
                f"theorem-4-converse[{mode.value}]",
                sr_open + (_p("gs-normal", mode),),
                _p("shrinking", mode),
            ),
            "supplementary converse direction",
        ))
    for mode in modes:
        rows.append((
            Implication(
                f"theorem-5[{mode.value}]",
                (_p("gs-normal", mode), _p("gamma-t1"), _p("strictly-regular-op")),
                _p("gs-regular", mode),
            ),
            "",
        ))
    rows.append((
        Implication(
            "theorem-5-lemma", (_p("strictly-regular-op"),),
            _p("disjoint-opens-disjoint-values"),
        ),
        "disjoint opens => disjoint gamma values, under strict regularity",
    ))
    for mode in modes:
        for conv in convs:
            rows.append((
                Implication(
                    f"theorem-6[{mode.value},{conv.value}]",
                    (_p("regular-op"), _p("gs-normal", mode)),
                    _p("closed-subspaces-gs-normal", mode, conv),
                ),
                "",
            ))
    for mode in modes:
        rows.append((
            Implication(
                f"theorem-7[{mode.value}]",
                (_p("gamma0-compact"), _p("gamma-t2"), _p("regular-op"), _p("open-op")),
                _p("gs-normal", mode),
            ),
            "",
        ))
    for conv in convs:
        rows.append((
            Implication(f"trace-agreement[{conv.value}]", (), _p("trace-family-agrees", conv=conv)),
            "supplementary: trace family vs induced gamma-opens, every subspace",
        ))
    return rows


def run_theorems(
    points: int,
    modes: Sequence[ClosedMode | str] = tuple(ClosedMode),
    convs: Sequence[TraceConvention | str] = tuple(TraceConvention),
    workers: int = 1,
    ops: str = "catalog",
) -> LabReport:
    scope = Scope.upto(points, ops)
    pairs = theorem_implications(modes, convs)
    rows = scan([imp for imp, _ in pairs], scope, workers)
    for row, (_, note) in zip(rows, pairs):
        row.note = note
    return LabReport(f"theorem checks, {scope}", rows)


def _theorem(number: str, points: int, modes, convs, workers: int) -> LabReport:
    scope = Scope.upto(points)
    pairs = [
        (imp, note)
        for imp, note in theorem_implications(modes, convs)
        if imp.name.split("[")[0].startswith(f"theorem-{number}")
    ]
    rows = scan([imp for imp, _ in pairs], scope, workers)
    for row, (_, note) in zip(rows, pairs):
        row.note = note
    return LabReport(f"theorem {number}, {scope}", rows)


def check_theorem_1(points: int = 3, workers: int = 1) -> LabReport:
    return _theorem("1", points, tuple(ClosedMode), tuple(TraceConvention), workers)


def check_theorem_2(points: int = 3, workers: int = 1) -> LabReport:
    return _theorem("2", points, tuple(ClosedMode), tuple(TraceConvention), workers)


def check_theorem_3(points: int = 3, conv="max", mode="tau", workers: int = 1) -> LabReport:
    return _theorem("3", points, (mode,), (conv,), workers)


def check_theorem_4(points: int = 3, mode="tau", workers: int = 1) -> LabReport:
    return _theorem("4", points, (mode,), tuple(TraceConvention), workers)


def check_theorem_5(points: int = 3, mode="tau", workers: int = 1) -> LabReport:
    return _theorem("5", points, (mode,), tuple(TraceConvention), workers)


def check_theorem_6(points: int = 3, conv="max", mode="tau", workers: int = 1) -> LabReport:
    return _theorem("6", points, (mode,), (conv,), workers)


def check_theorem_7(points: int = 3, mode="tau", workers: int = 1) -> LabReport:
    return _theorem("7", points, (mode,), tuple(TraceConvention), workers)
