from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .finset import format_set


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate.

    ``certificate`` is populated when the predicate holds and ``witness`` when
    it fails.  Witness keys starting with a lowercase letter name points
    (index values); keys starting with an uppercase letter name sets (bit
    masks).  Certificate layout is documented by each predicate.
    """

    holds: bool
    certificate: Any = None
    witness: dict[str, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def describe(self, names: Sequence[str]) -> str:
        return render_witness(self.witness, names)


def passed(certificate: Any = None) -> Verdict:
    return Verdict(True, certificate=certificate)


def failed(**witness: int) -> Verdict:
    return Verdict(False, witness=witness)


def render_witness(witness: dict[str, int], names: Sequence[str]) -> str:
    parts = []
    for key, value in witness.items():
        if key[:1].islower():
            parts.append(f"{key}={names[value]}")
        else:
            parts.append(f"{key}={format_set(value, names)}")
    return ", ".join(parts)
