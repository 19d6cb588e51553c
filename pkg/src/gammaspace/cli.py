"""Command-line front end.

Exit codes: 0 when the checked property or implication holds (or an
enumeration completes), 1 when it fails or a counterexample is found, 2 on
input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import NamedTuple, Sequence

from .errors import GammaSpaceError
from .finset import enumerate_topologies
from .lab import Scope, check_implication, parse_implication, run_theorems
from .properties import PROPERTY_NAMES, parse_prop
from .separation import ClosedMode
from .spacefile import parse_space_file
from .subspace import TraceConvention
from .worked import run_paper_examples


class UsageError(Exception):
    pass


class Result(NamedTuple):
    code: int
    out: str
    err: str = ""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gammaspace", description="Finite gamma-operation checker.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def modes(p, multi: bool):
        p.add_argument("--closed-mode", choices=[m.value for m in ClosedMode],
                       default=None if multi else "tau")
        p.add_argument("--trace-convention", choices=[c.value for c in TraceConvention],
                       default=None if multi else "max")

    p = sub.add_parser("check", help="evaluate properties of a space file")
    p.add_argument("file")
    p.add_argument("--property", help="one of: " + ", ".join(PROPERTY_NAMES))
    modes(p, multi=False)

    p = sub.add_parser("enumerate", help="list all topologies on N points")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--count-only", action="store_true")

    for name in ("falsify", "theorems"):
        p = sub.add_parser(name)
        p.add_argument("--points", type=int, required=True)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--no-timing", action="store_true", help="omit elapsed times")
        if name == "falsify":
            p.add_argument("--ops", choices=["catalog", "all"], default="catalog")
            p.add_argument("--implication", required=True)
            modes(p, multi=False)
        else:
            modes(p, multi=True)

    sub.add_parser("paper-examples", help="reproduce the claims about the bundled examples")
    return parser


def _check(args) -> Result:
    space = parse_space_file(Path(args.file).read_text(encoding="utf-8"))
    names = space.topology.names
    head = (
        f"space {space.name}: {space.n} points, {len(space.opens)} opens, "
        f"gamma={space.rule_text()}"
    )
    lines = [head, "gamma-open sets: " + " ".join(space.fmt(a) for a in space.gamma_opens)]
    if args.property:
        props = [parse_prop(args.property, args.closed_mode, args.trace_convention)]
    else:
        props = [parse_prop(n, args.closed_mode, args.trace_convention) for n in PROPERTY_NAMES]
    all_hold = True
    for prop in props:
        verdict = prop.evaluate(space)
        if verdict.holds:
            lines.append(f"{prop}: holds")
        else:
            all_hold = False
            lines.append(f"{prop}: fails; witness {verdict.describe(names)}")
    code = 0 if all_hold or not args.property else 1
    return Result(code, "\n".join(lines) + "\n")


def _enumerate(args) -> Result:
    tops = list(enumerate_topologies(args.points))
    if args.count_only:
        return Result(0, f"{len(tops)}\n")
    out = [" ".join(t.fmt(u) for u in t.opens) for t in tops]
    out.append(f"{len(tops)} topologies")
    return Result(0, "\n".join(out) + "\n")


def _falsify(args) -> Result:
    imp = parse_implication(args.implication, args.closed_mode, args.trace_convention)
    scope = Scope.upto(args.points, args.ops)
    report = check_implication(imp, scope, workers=args.workers)
    row = report.rows[0]
    text = report.render(timing=not args.no_timing)
    if row.holds:
        text += f"no counterexample, {row.total} instances\n"
        return Result(0, text)
    return Result(1, text)


def _theorems(args) -> Result:
    modes = [args.closed_mode] if args.closed_mode else list(ClosedMode)
    convs = [args.trace_convention] if args.trace_convention else list(TraceConvention)
    report = run_theorems(args.points, modes, convs, workers=args.workers)
    code = 0 if all(r.holds for r in report.rows) else 1
    return Result(code, report.render(timing=not args.no_timing))


def _examples(args) -> Result:
    report = run_paper_examples()
    return Result(0 if report.ok else 1, report.render())


_COMMANDS = {
    "check": _check,
    "enumerate": _enumerate,
    "falsify": _falsify,
    "theorems": _theorems,
    "paper-examples": _examples,
}


def run_command(argv: Sequence[str]) -> Result:
    try:
        args = build_parser().parse_args(list(argv))
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        return Result(2, "", f"{exc}\n")
    except (GammaSpaceError, ValueError, OSError) as exc:
        return Result(2, "", f"error: {exc}\n")


def main(argv: Sequence[str] | None = None) -> int:
    result = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.out)
    sys.stderr.write(result.err)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
