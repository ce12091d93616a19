"""Deterministic reports produced by the verification scans.

A report compares the exceptions a scan actually found against the
expected list bundled with the package.  Entries marked optional are
allowed but not required.  Serialization is stable: entries are sorted,
JSON keys are sorted, and text output is line-oriented so that runs can
be diffed.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

__all__ = ["VerificationReport"]


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    found: list[str]
    expected: list[str]
    optional: list[str]
    missing: list[str]
    unexpected: list[str]
    pattern_mismatches: list[str]
    optional_found: list[str]
    elapsed_seconds: float = field(default=0.0)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.unexpected or self.pattern_mismatches)

    def to_json(self) -> str:
        payload = asdict(self)
        payload["ok"] = self.ok
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        payload = json.loads(text)
        payload.pop("ok", None)
        return cls(**payload)

    def to_text(self) -> str:
        lines = [f"scan: {self.theorem}"]
        for key in sorted(self.params):
            lines.append(f"  {key}: {self.params[key]}")
        lines.append(f"  result: {'OK' if self.ok else 'MISMATCH'}")
        lines.append(f"  found exceptions ({len(self.found)}):")
        lines.extend(f"    {entry}" for entry in self.found)
        if self.optional_found:
            lines.append("  optional entries that occurred:")
            lines.extend(f"    {entry}" for entry in self.optional_found)
        if self.missing:
            lines.append("  MISSING (expected but not found):")
            lines.extend(f"    {entry}" for entry in self.missing)
        if self.unexpected:
            lines.append("  UNEXPECTED (found but not expected):")
            lines.extend(f"    {entry}" for entry in self.unexpected)
        if self.pattern_mismatches:
            lines.append("  PATTERN MISMATCHES:")
            lines.extend(f"    {entry}" for entry in self.pattern_mismatches)
        lines.append(f"  elapsed: {self.elapsed_seconds:.2f}s")
        return "\n".join(lines)

    def to_tsv(self) -> str:
        rows = [("scan", self.theorem), ("ok", str(self.ok).lower())]
        rows.extend((f"param:{k}", str(v)) for k, v in sorted(self.params.items()))
        rows.extend(("found", entry) for entry in self.found)
        rows.extend(("optional_found", entry) for entry in self.optional_found)
        rows.extend(("missing", entry) for entry in self.missing)
        rows.extend(("unexpected", entry) for entry in self.unexpected)
        rows.extend(("pattern_mismatch", entry) for entry in self.pattern_mismatches)
        return "\n".join("\t".join(row) for row in rows)
