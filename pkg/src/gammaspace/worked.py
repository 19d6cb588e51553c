"""The four bundled example spaces and the claims made about them."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .operations import Space
from .properties import Prop
from .spacefile import parse_space_file
from .verdict import render_witness

EXAMPLE_FILES = {
    "Example1": "example1.space",
    "Example2": "example2.space",
    "RegularExample": "regular_example.space",
    "NormalExample": "normal_example.space",
}


def space_text(filename: str) -> str:
    return resources.files("gammaspace").joinpath("spaces", filename).read_text()


def load_example(name: str) -> Space:
    return parse_space_file(space_text(EXAMPLE_FILES[name]))


@dataclass
class ClaimLine:
    space: str
    claim: str
    expected: str
    got: str
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass
class ExampleReport:
    lines: list[ClaimLine] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def render(self) -> str:
        rows = [("space", "claim", "expected", "got", "status", "witness")]
        for ln in self.lines:
            rows.append((ln.space, ln.claim, ln.expected, ln.got, "PASS" if ln.ok else "FAIL", ln.witness or "-"))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        out = ["# example claims"]
        for r in rows:
            out.append(" | ".join([c.ljust(w) for c, w in zip(r, widths)] + [r[5]]).rstrip())
        if self.findings:
            out += ["", "findings:"] + [f"- {f}" for f in self.findings]
        return "\n".join(out) + "\n"


def _family(s: Space) -> str:
    return "{" + ", ".join(s.fmt(a) for a in s.gamma_opens) + "}"


def _check(report: ExampleReport, s: Space, prop: str, expected: bool, mode=None) -> bool:
    p = Prop(prop, mode)
    v = p.evaluate(s)
    witness = "" if v.holds else render_witness(v.witness, s.topology.names)
    report.lines.append(ClaimLine(s.name, str(p), str(expected).lower(), str(v.holds).lower(), witness))
    return v.holds


def run_paper_examples() -> ExampleReport:
    report = ExampleReport()

    ex1 = load_example("Example1")
    report.lines.append(ClaimLine(
        ex1.name, "gamma-open sets", "{{}, {a}, {b}, {a b}, {a b c}}", _family(ex1)
    ))
    _check(report, ex1, "strictly-regular-op", True)
    _check(report, ex1, "open-op", True)

    ex2 = load_example("Example2")
    report.lines.append(ClaimLine(ex2.name, "gamma-open sets", "{{}, {a b c}}", _family(ex2)))
    _check(report, ex2, "strictly-regular-op", True)
    _check(report, ex2, "open-op", False)

    reg = load_example("RegularExample")
    _check(report, reg, "gs-regular", True, "tau")
    _check(report, reg, "gs-regular", True, "gamma")

    nrm = load_example("NormalExample")
    tau = _check(report, nrm, "gs-normal", False, "tau")
    gamma = _check(report, nrm, "gs-normal", True, "gamma")
    if tau != gamma:
        report.findings.append(
            f"{nrm.name}: claimed gs-normal without qualification, but the verdict "
            f"depends on the closed-set mode (tau: {str(tau).lower()}, "
            f"gamma: {str(gamma).lower()})"
        )
    return report
