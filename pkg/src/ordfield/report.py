"""The property-by-field matrix: run every probe and render the result."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources

from .fields import DEFAULT_HORIZON, FieldHandle, default_fields
from .probes import safe_probe
from .results import PROPERTY_SLUGS, ProbeResult, Status

SCHEMA_VERSION = 1

GLYPHS = {
    Status.HOLDS: "✓",
    Status.FAILS: "✗",
    Status.NOT_PROBED: "·",
    Status.INCONCLUSIVE: "?",
}


@dataclass
class Report:
    meta: dict
    fields: list  # [(handle name, label, [ProbeResult] * 18)]
    wall_time: float = field(default=0.0, compare=False)

    def cell(self, field_name: str, prop: int) -> ProbeResult:
        for name, _, results in self.fields:
            if name == field_name:
                return results[prop - 1]
        raise KeyError(field_name)

    def statuses(self) -> dict:
        return {name: {r.property: r.status.value for r in results}
                for name, _, results in self.fields}

    def to_dict(self) -> dict:
        return {
            "meta": dict(self.meta),
            "fields": [
                {"name": name, "label": label,
                 "results": [r.to_dict() for r in results]}
                for name, label, results in self.fields
            ],
        }


def run_matrix(fields=None, seed=0) -> Report:
    """Probe properties 1..18 in each field; errors become Inconclusive cells."""
    fields = default_fields() if fields is None else list(fields)
    start = time.perf_counter()
    rows = []
    for h in fields:
        rows.append((h.name, h.label, [safe_probe(h, n, seed=seed) for n in PROPERTY_SLUGS]))
    meta = {
        "schema": SCHEMA_VERSION,
        "seed": seed,
        "fields": [h.name for h in fields],
        "horizon": {h.name: h.horizon for h in fields},
        "order": {h.name: h.order for h in fields},
        "version": _version(),
    }
    return Report(meta, rows, time.perf_counter() - start)


def _version():
    from . import __version__
    return __version__


def render(report: Report, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"
    if fmt in ("markdown", "md"):
        return _markdown(report)
    raise ValueError(f"unknown format {fmt!r}")


def parse_json(text: str) -> dict:
    return json.loads(text)


def _markdown(report: Report) -> str:
    labels = [label for _, label, _ in report.fields]
    lines = [
        f"# Completeness properties by field (seed {report.meta.get('seed')})",
        "",
        "✓ HoldsConstructive: constructed on a documented battery (evidence, not a proof).  ",
        "✗ FailsWitnessed: exact counterexample that re-checks (a disproof).  ",
        "· NotProbed.  ? Inconclusive.",
        "",
    ]
    if not report.fields:
        lines.append("(no fields)")
        return "\n".join(lines) + "\n"
    lines.append("| # | property | " + " | ".join(labels) + " |")
    lines.append("|---|---|" + "---|" * len(labels))
    notes = []
    for n, slug in PROPERTY_SLUGS.items():
        cells = []
        for _, label, results in report.fields:
            r = results[n - 1]
            cell = GLYPHS[r.status]
            if r.status is Status.FAILS and r.witnesses:
                notes.append(f"[^{len(notes) + 1}]: ({n}) in {label}, "
                             f"{r.witnesses[0].kind.value}: {r.witnesses[0].certificate}")
                cell += f"[^{len(notes)}]"
            cells.append(cell)
        lines.append(f"| {n} | {slug} | " + " | ".join(cells) + " |")
    lines.append("")
    lines.extend(notes)
    return "\n".join(lines) + "\n"


# -- the expected table ------------------------------------------------------------------


def expected_statuses() -> dict:
    """Expected status per field name and property, shipped as package data."""
    text = resources.files("ordfield").joinpath("data/expected_matrix.json").read_text("utf-8")
    return _statuses_from(json.loads(text))


def _statuses_from(data: dict) -> dict:
    # accepts either a full rendered report or the bare {field: {prop: status}} table
    if "fields" in data and isinstance(data["fields"], list):
        return {f["name"]: {int(r["property"]): r["status"] for r in f["results"]}
                for f in data["fields"]}
    return {name: {int(k): v for k, v in table.items()} for name, table in data.items()}


def load_fixture(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return _statuses_from(json.load(fh))


def compare(report: Report, expected: dict = None):
    """List of ``(field, property, expected, actual)`` mismatches for the report's fields."""
    expected = expected_statuses() if expected is None else expected
    actual = report.statuses()
    out = []
    for name, table in actual.items():
        want = expected.get(name)
        if want is None:
            continue
        for prop, status in table.items():
            if want.get(prop) != status:
                out.append((name, prop, want.get(prop), status))
    return out
