"""Run reports with matching JSON and text renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexamples: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.counterexamples:
            out["counterexamples"] = [str(c) for c in self.counterexamples[:20]]
        return out


@dataclass
class RunReport:
    """Outcome of one CLI command.

    ``payload`` carries command-specific exact results (strings or JSON
    data); the verdict is the conjunction of the recorded checks.
    """

    command: str
    descriptors: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    payload: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    timing: float | None = None
    raw: str | None = None  # verbatim body (basis export)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, detail: str = "", counterexamples=()) -> bool:
        self.checks.append(CheckResult(name, bool(passed), detail, list(counterexamples)))
        return passed

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "descriptors": [d.to_json() for d in self.descriptors],
            "checks": [c.to_json() for c in self.checks],
            "passed": self.passed,
            "payload": self.payload,
        }
        if self.timing is not None:
            out["timing_seconds"] = round(self.timing, 3)
        return out

    def render_json(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def render_text(self) -> str:
        out = [f"$ {self.command}"]
        out.extend(str(d) for d in self.descriptors)
        out.extend(self.lines)
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            out.append(f"[{mark}] {c.name}" + (f": {c.detail}" if c.detail else ""))
            for ce in c.counterexamples[:5]:
                out.append(f"    counterexample: {ce}")
        if self.checks:
            out.append("verdict: " + ("pass" if self.passed else "fail"))
        if self.timing is not None:
            out.append(f"time: {self.timing:.3f}s")
        return "\n".join(out)
