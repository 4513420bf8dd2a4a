"""Structured results for check suites.

Every verification entry point returns a :class:`Report`: suite name, an
echo of the parameters, how many checks ran, the failures (each with the
violated constraint id, the witness indices and the nonzero residue,
preformatted as text), wall-clock time, and an optional suite-specific
``data`` payload (e.g. the orbit dimension trace).  A report is "pass"
exactly when it has no failures.

Reports serialize to a stable JSON document; ``from_dict(to_dict(r))``
round-trips and re-serializes to identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Failure:
    constraint: str
    indices: tuple[Any, ...]
    residue: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "constraint": self.constraint,
            "indices": list(self.indices),
            "residue": self.residue,
        }

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> Failure:
        return cls(
            constraint=doc["constraint"],
            indices=tuple(doc["indices"]),
            residue=doc["residue"],
        )


@dataclass
class Report:
    suite: str
    params: dict[str, str] = field(default_factory=dict)
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, constraint: str, indices: tuple[Any, ...], residue: str) -> None:
        self.failures.append(Failure(constraint, indices, residue))

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": dict(self.params),
            "checks": self.checks,
            "failures": [f.to_dict() for f in self.failures],
            "status": "pass" if self.passed else "fail",
            "elapsed_s": self.elapsed,
            "data": self.data,
        }

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> Report:
        report = cls(
            suite=doc["suite"],
            params=dict(doc["params"]),
            checks=doc["checks"],
            failures=[Failure.from_dict(f) for f in doc["failures"]],
            elapsed=doc["elapsed_s"],
            data=doc.get("data", {}),
        )
        status = doc["status"]
        if status != ("pass" if report.passed else "fail"):
            raise ValueError("status is inconsistent with failure count")
        return report

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for k, v in self.params.items():
            lines.append(f"  {k}: {v}")
        lines.append(f"checks: {self.checks}")
        lines.append(f"failures: {len(self.failures)}")
        for f in self.failures[:20]:
            idx = ", ".join(str(i) for i in f.indices)
            lines.append(f"  FAIL {f.constraint} @ ({idx}): residue = {f.residue}")
        if len(self.failures) > 20:
            lines.append(f"  ... and {len(self.failures) - 20} more")
        for k, v in self.data.items():
            lines.append(f"{k}: {v}")
        lines.append(f"status: {'pass' if self.passed else 'fail'}")
        lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)
