"""Machine-readable check verdicts and their JSON form."""

from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass, field
from typing import Any


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INFINITE = "infinite-outcome"


@dataclass
class CertReport:
    check: str
    status: Status
    witnesses: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    elapsed: float | None = None

    def __post_init__(self):
        self.status = Status(self.status)
        if self.status is Status.FAIL and not self.witnesses:
            raise ValueError(f"{self.check}: a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def __bool__(self):
        return self.passed

    def to_json(self, timing: bool = False) -> dict:
        doc = {
            "check": self.check,
            "status": self.status.value,
            "witnesses": jsonable(self.witnesses),
            "params": jsonable(self.params),
            "details": jsonable(self.details),
        }
        if timing and self.elapsed is not None:
            doc["elapsed_s"] = round(self.elapsed, 6)
        return doc

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True)

    def text(self) -> str:
        head = f"{self.status.value.upper():<16} {self.check}"
        if self.params:
            head += "  " + " ".join(f"{k}={_short(v)}" for k, v in sorted(self.params.items()))
        lines = [head]
        for w in self.witnesses[:10]:
            lines.append(f"  witness: {_short(w)}")
        if len(self.witnesses) > 10:
            lines.append(f"  ... {len(self.witnesses) - 10} more witnesses")
        return "\n".join(lines)


def combine(check: str, parts: list[CertReport], params: dict | None = None) -> CertReport:
    """Aggregate sub-reports; fails if any part fails."""
    failed = [p for p in parts if p.status is Status.FAIL]
    status = Status.FAIL if failed else Status.PASS
    witnesses = [{"part": p.check, "witness": p.witnesses[0]} for p in failed]
    details = {"parts": [{"check": p.check, "status": p.status.value, "params": p.params} for p in parts]}
    return CertReport(check, status, witnesses, params or {}, details)


def jsonable(obj: Any) -> Any:
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    return obj


def _short(v: Any) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(_short(x) for x in v) + ")"
    if isinstance(v, list):
        return "[" + ", ".join(_short(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_short(x)}" for k, x in v.items()) + "}"
    if isinstance(v, enum.Enum):
        return str(v.value)
    return str(v)
