"""Pass/fail records shared by the checking routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "pass": self.passed, "witness": self.witness}


@dataclass
class Report:
    suite: str
    checks: List[Check] = field(default_factory=list)
    elapsed_ms: int = 0
    data: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), "" if passed else witness))
        return bool(passed)

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)
        self.data.update(other.data)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self, *, timing: bool = True) -> dict:
        out = {"suite": self.suite, "pass": self.passed,
               "checks": [c.to_json() for c in self.checks]}
        if self.data:
            out["data"] = dict(self.data)
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out
