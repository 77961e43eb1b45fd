"""Probe outcomes and the witnesses that back them."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

PROPERTY_SLUGS = {
    1: "dedekind-completeness",
    2: "archimedean",
    3: "cut-property",
    4: "topological-connectedness",
    5: "intermediate-value",
    6: "bounded-value",
    7: "extreme-value",
    8: "mean-value",
    9: "constant-value",
    10: "bounded-monotone-convergence",
    11: "cauchy-convergence",
    12: "fixed-point",
    13: "contraction-map",
    14: "alternating-series",
    15: "absolute-convergence",
    16: "ratio-test",
    17: "shrinking-interval",
    18: "nested-interval",
}


class Status(str, enum.Enum):
    # HOLDS: an algorithm produced the asserted object on a documented battery.
    # That is evidence, not a proof of the universal statement.
    # FAILS: at least one exact, re-checkable counterexample. That is a disproof.
    HOLDS = "HoldsConstructive"
    FAILS = "FailsWitnessed"
    NOT_PROBED = "NotProbed"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


class WitnessKind(str, enum.Enum):
    WRONG_SIDE_ELEMENT = "WrongSideElement"
    LARGER_MEMBER = "LargerMember"
    SMALLER_UPPER_BOUND = "SmallerUpperBound"
    SEPARATED_TAIL = "SeparatedTail"
    ESCAPED_INTERVAL = "EscapedInterval"
    NOT_FIXED = "NotFixed"
    BIGGER_VALUE = "BiggerValue"
    LOCALLY_CONSTANT = "LocallyConstant"
    NONZERO_VALUE = "NonzeroValue"
    UNBOUNDED_VALUE = "UnboundedValue"
    EXCEEDS_NATURALS = "ExceedsNaturals"
    AXIOM_VIOLATION = "AxiomViolation"
    DOUBLE_POINT = "TwoPointIntersection"

    def __str__(self):
        return self.value


def _render(value) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _render(v) for k, v in value.items()}
    return str(value)


@dataclass
class Witness:
    """A concrete counterexample plus a closure that re-checks it exactly."""

    kind: WitnessKind
    elements: tuple
    certificate: str
    check: Callable[[], bool] = field(repr=False, compare=False, default=None)
    details: dict = field(default_factory=dict)

    def verify(self) -> bool:
        if self.check is None:
            return False
        return bool(self.check())

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "elements": [_render(e) for e in self.elements],
            "certificate": self.certificate,
            "details": _render(self.details),
        }


@dataclass
class ProbeResult:
    property: Optional[int]
    field: str
    status: Status
    witnesses: list = field(default_factory=list)
    transcript: list = field(default_factory=list)
    constructed: list = field(default_factory=list)
    slug: str = ""

    def __post_init__(self):
        if not self.slug and self.property in PROPERTY_SLUGS:
            self.slug = PROPERTY_SLUGS[self.property]

    @property
    def passed(self) -> bool:
        return self.status is Status.HOLDS

    def log(self, line: str):
        self.transcript.append(line)

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "slug": self.slug,
            "status": self.status.value,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "constructed": [_render(c) for c in self.constructed],
            "transcript": list(self.transcript),
        }

    def summary(self) -> str:
        lines = [f"property {self.property} ({self.slug}) in {self.field}: {self.status.value}"]
        for w in self.witnesses:
            lines.append(f"  witness [{w.kind.value}] {w.certificate}")
        for c in self.constructed:
            lines.append(f"  constructed {_render(c)}")
        lines.extend(f"  | {t}" for t in self.transcript)
        return "\n".join(lines)
