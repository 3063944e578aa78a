"""Small pass/fail report used by every verification routine."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    residual: float | None = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        res = "" if self.residual is None else f"  residual={self.residual:.3e}"
        extra = f"  {self.detail}" if self.detail else ""
        return f"[{status}] {self.name}{res}{extra}"

    def to_json_obj(self) -> dict:
        res = self.residual
        if res is not None and not math.isfinite(res):
            res = str(res)
        return {"name": self.name, "passed": self.passed, "residual": res, "detail": self.detail}


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, residual: float | None = None, detail: str = "") -> Check:
        c = Check(name, bool(passed), residual, detail)
        self.checks.append(c)
        return c

    def tolerance(self, name: str, residual: float, tol: float, detail: str = "") -> Check:
        return self.add(name, residual < tol, float(residual), detail)

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def text(self) -> str:
        return "\n".join([f"== {self.title}"] + [c.line() for c in self.checks])

    def to_json_obj(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_json_obj() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)
