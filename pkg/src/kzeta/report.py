"""Verification entries and their text/JSON/CSV renderings."""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field

__all__ = ["Provenance", "Entry", "VerificationReport", "format_real", "JSON_SCHEMA"]


class Provenance(str, enum.Enum):
    PAPER = "paper"
    TRIVIAL = "trivial"
    DERIVED = "derived"


def format_real(x: float) -> str:
    """17 significant digits in scientific notation (round-trips a double)."""
    return format(float(x), ".16e")


@dataclass(frozen=True)
class Entry:
    name: str
    expected: float
    computed: float
    abs_error: float
    rel_error: float
    passed: bool
    provenance: Provenance
    note: str = ""

    @classmethod
    def compare(cls, name, expected, computed, tolerance, provenance, note=""):
        expected = float(expected)
        computed = float(computed)
        abs_error = abs(computed - expected)
        # rel_error falls back to abs_error when the expected value is zero
        rel_error = abs_error / abs(expected) if expected != 0.0 else abs_error
        passed = abs_error <= tolerance or rel_error <= tolerance
        return cls(name, expected, computed, abs_error, rel_error, passed, Provenance(provenance), note)

    @property
    def informational(self) -> bool:
        return self.name.startswith("audit.")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "computed": self.computed,
            "abs_error": self.abs_error,
            "rel_error": self.rel_error,
            "pass": self.passed,
            "provenance": self.provenance.value,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    suite: str
    tolerance: float
    entries: list[Entry] = field(default_factory=list)
    wall_time_ms: int = 0

    def sorted(self) -> "VerificationReport":
        return VerificationReport(
            self.suite, self.tolerance, sorted(self.entries, key=lambda e: e.name), self.wall_time_ms
        )

    @property
    def ok(self) -> bool:
        """True iff every non-audit entry passes."""
        return all(e.passed for e in self.entries if not e.informational)

    def get(self, name: str) -> Entry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_json(self) -> str:
        # numbers are written by hand so they carry exactly 17 significant digits
        parts = [
            "{",
            f'  "suite": {json.dumps(self.suite)},',
            f'  "tolerance": {format_real(self.tolerance)},',
            '  "entries": [',
        ]
        rows = []
        for e in self.entries:
            rows.append(
                "    {"
                f'"name": {json.dumps(e.name)}, '
                f'"expected": {format_real(e.expected)}, '
                f'"computed": {format_real(e.computed)}, '
                f'"abs_error": {format_real(e.abs_error)}, '
                f'"rel_error": {format_real(e.rel_error)}, '
                f'"pass": {"true" if e.passed else "false"}, '
                f'"provenance": {json.dumps(e.provenance.value)}, '
                f'"note": {json.dumps(e.note)}'
                "}"
            )
        parts.append(",\n".join(rows))
        parts.append("  ],")
        parts.append(f'  "wall_time_ms": {int(self.wall_time_ms)}')
        parts.append("}")
        return "\n".join(parts) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        data = json.loads(text)
        entries = [
            Entry(
                d["name"],
                d["expected"],
                d["computed"],
                d["abs_error"],
                d["rel_error"],
                d["pass"],
                Provenance(d["provenance"]),
                d["note"],
            )
            for d in data["entries"]
        ]
        return cls(data["suite"], data["tolerance"], entries, data["wall_time_ms"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "expected", "computed", "abs_error", "rel_error", "pass", "provenance", "note"])
        for e in self.entries:
            writer.writerow(
                [
                    e.name,
                    format_real(e.expected),
                    format_real(e.computed),
                    format_real(e.abs_error),
                    format_real(e.rel_error),
                    "true" if e.passed else "false",
                    e.provenance.value,
                    e.note,
                ]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}   tolerance: {self.tolerance:.1e}"]
        width = max((len(e.name) for e in self.entries), default=4)
        for e in self.entries:
            if e.informational:
                status = "MATCH" if e.passed else "MISMATCH"
            else:
                status = "PASS" if e.passed else "FAIL"
            line = (
                f"{status:8s} {e.name:<{width}s}  expected={e.expected:.15g}  "
                f"computed={e.computed:.15g}  abs={e.abs_error:.2e}  [{e.provenance.value}]"
            )
            if e.note:
                line += f"  {e.note}"
            lines.append(line)
        failed = sum(1 for e in self.entries if not e.passed and not e.informational)
        flagged = sum(1 for e in self.entries if not e.passed and e.informational)
        lines.append(f"{len(self.entries)} entries, {failed} failed, {flagged} audit mismatches")
        if self.wall_time_ms:
            lines.append(f"wall time: {self.wall_time_ms} ms")
        return "\n".join(lines) + "\n"


JSON_SCHEMA = {
    "type": "object",
    "required": ["suite", "tolerance", "entries", "wall_time_ms"],
    "additionalProperties": False,
    "properties": {
        "suite": {"type": "string"},
        "tolerance": {"type": "number"},
        "wall_time_ms": {"type": "integer"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": [
                    "name", "expected", "computed", "abs_error",
                    "rel_error", "pass", "provenance", "note",
                ],
                "properties": {
                    "name": {"type": "string"},
                    "expected": {"type": "number"},
                    "computed": {"type": "number"},
                    "abs_error": {"type": "number"},
                    "rel_error": {"type": "number"},
                    "pass": {"type": "boolean"},
                    "provenance": {"type": "string", "enum": ["paper", "trivial", "derived"]},
                    "note": {"type": "string"},
                },
            },
        },
    },
}
