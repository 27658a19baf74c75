"""Conformance cases and reports.

Verdicts: PASS is an exact zero residual, FAIL a nonzero residual on an
identity that is claimed to hold, INFO a probe with no claim attached.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .algebra import TwistedElement, format_element, from_record, parse_element, to_record

ENGINE_VERSION = "0.1.0"


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INFO = "INFO"


@dataclass
class ConformanceCase:
    id: str
    anchor: str
    status: Status
    residual: TwistedElement | None = None
    numeric: dict | None = None
    note: str = ""

    @classmethod
    def compare(cls, id: str, anchor: str, engine: TwistedElement, expected: TwistedElement,
                note: str = "") -> ConformanceCase:
        residual = engine - expected
        status = Status.PASS if residual.is_zero() else Status.FAIL
        return cls(id, anchor, status, residual, note=note)

    @classmethod
    def zero(cls, id: str, anchor: str, value: TwistedElement, note: str = "") -> ConformanceCase:
        return cls(id, anchor, Status.PASS if value.is_zero() else Status.FAIL, value, note=note)

    @classmethod
    def info(cls, id: str, anchor: str, value: TwistedElement | None = None,
             numeric: dict | None = None, note: str = "") -> ConformanceCase:
        return cls(id, anchor, Status.INFO, value, numeric, note)

    @classmethod
    def check(cls, id: str, anchor: str, ok: bool, numeric: dict | None = None,
              note: str = "", residual: TwistedElement | None = None) -> ConformanceCase:
        return cls(id, anchor, Status.PASS if ok else Status.FAIL, residual, numeric, note)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.id, "paper_anchor": self.anchor, "status": self.status.value}
        if self.residual is not None and self.status is not Status.PASS:
            out["residual"] = format_element(self.residual)
            out["residual_record"] = to_record(self.residual)
        if self.numeric is not None:
            out["numeric"] = self.numeric
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_dict(cls, d: dict) -> ConformanceCase:
        residual = None
        if "residual_record" in d:
            residual = from_record(d["residual_record"])
        elif "residual" in d:
            residual = parse_element(d["residual"])
        return cls(d["id"], d["paper_anchor"], Status(d["status"]), residual,
                   d.get("numeric"), d.get("note", ""))


@dataclass
class Report:
    suite: str
    cases: list[ConformanceCase]
    seed: int
    config: dict = field(default_factory=dict)
    required: bool = True
    engine_version: str = ENGINE_VERSION

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "info": 0}
        for c in self.cases:
            counts[c.status.value.lower()] += 1
        counts["total"] = len(self.cases)
        return counts

    @property
    def ok(self) -> bool:
        return not self.required or self.summary["fail"] == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "engine_version": self.engine_version,
            "seed": self.seed,
            "required": self.required,
            "config": self.config,
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(d["suite"], [ConformanceCase.from_dict(c) for c in d["cases"]], d["seed"],
                   d.get("config", {}), d.get("required", True), d.get("engine_version", ENGINE_VERSION))

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def render_text(self, verbose: bool = False) -> str:
        lines = [f"suite {self.suite}  (engine {self.engine_version}, seed {self.seed}, "
                 f"{'required' if self.required else 'audit'})"]
        for c in self.cases:
            line = f"  {c.status.value:4s}  {c.id}  [{c.anchor}]"
            if c.note:
                line += f"  {c.note}"
            lines.append(line)
            if c.status is not Status.PASS and c.residual is not None and (verbose or c.status is Status.FAIL):
                lines.append(f"        residual: {format_element(c.residual)}")
            if c.numeric and verbose:
                lines.append(f"        numeric: {c.numeric}")
        s = self.summary
        lines.append(f"  summary: {s['pass']} pass, {s['fail']} fail, {s['info']} info")
        return "\n".join(lines)
