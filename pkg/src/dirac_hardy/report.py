"""Structured pass/fail records shared by the library and the CLI.

Reports are plain data: one ``CaseRecord`` per checked case, aggregated into a
``VerificationReport`` that serializes losslessly to JSON (sorted keys, so two
identical runs produce identical bytes) and to flat CSV rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

__version__ = "0.1.0"


def format_float(x) -> str:
    """Locale-free decimal form with enough digits to round-trip."""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


@dataclass
class CaseRecord:
    """One verified case: inputs, computed and oracle values, and the margin.

    ``tolerance=None`` marks an informational case that reports a measured
    value without gating the run.
    """

    name: str
    inputs: dict
    computed: dict
    oracle: dict = field(default_factory=dict)
    margin: float | None = None
    tolerance: float | None = None
    passed: bool = True

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "computed": self.computed,
            "oracle": self.oracle,
            "margin": self.margin,
            "tolerance": self.tolerance,
            "passed": bool(self.passed),
        }


def case(name, inputs, computed, oracle=None, margin=None, tolerance=None):
    """Build a CaseRecord, deriving ``passed`` from margin vs tolerance."""
    passed = True
    if tolerance is not None:
        passed = margin is not None and abs(margin) <= tolerance
    return CaseRecord(
        name=name,
        inputs=inputs,
        computed=computed,
        oracle=oracle or {},
        margin=margin,
        tolerance=tolerance,
        passed=passed,
    )


@dataclass
class VerificationReport:
    command: str
    cases: list[CaseRecord] = field(default_factory=list)
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def worst_margin(self) -> float | None:
        margins = [abs(c.margin) for c in self.cases if c.margin is not None]
        return max(margins) if margins else None

    def extend(self, other: "VerificationReport") -> None:
        self.cases.extend(other.cases)

    def summary(self) -> dict:
        npassed = sum(1 for c in self.cases if c.passed)
        return {
            "cases": len(self.cases),
            "passed": npassed,
            "failed": len(self.cases) - npassed,
            "worst_margin": self.worst_margin,
            "all_passed": self.passed,
        }

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "version": self.version,
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def write_json(self, path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")


def write_csv(path, header: list[str], rows: list[list]) -> None:
    """Write rows with '.'-decimal floats at 17 significant digits."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_float(x) for x in row))
    text = "\n".join(lines) + "\n"
    if path is None:
        print(text, end="")
    else:
        Path(path).write_text(text, encoding="utf-8")


def csv_text(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_float(x) for x in row))
    return "\n".join(lines) + "\n"
