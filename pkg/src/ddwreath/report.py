"""Structured check reports: every identity check records its witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from .errors import VerificationError

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


def _jsonable(value: Any) -> Any:
    # big integers travel as decimal strings
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value) if not isinstance(value, (str, float)) else value


@dataclass(frozen=True)
class Check:
    check_id: str
    status: str
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict[str, Any]:
        return {"check": self.check_id, "status": self.status, "witness": _jsonable(self.witness)}


def check(check_id: str, condition: bool, **witness: Any) -> Check:
    return Check(check_id, PASS if condition else FAIL, witness)


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, item: Check) -> Check:
        self.checks.append(item)
        return item

    def extend(self, other: "Report | Iterable[Check]") -> None:
        self.checks.extend(other.checks if isinstance(other, Report) else other)

    @property
    def ok(self) -> bool:
        return all(ch.ok for ch in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [ch for ch in self.checks if not ch.ok]

    def __getitem__(self, check_id: str) -> Check:
        for ch in self.checks:
            if ch.check_id == check_id:
                return ch
        raise KeyError(check_id)

    def __contains__(self, check_id: str) -> bool:
        return any(ch.check_id == check_id for ch in self.checks)

    def raise_if_failed(self) -> "Report":
        if not self.ok:
            raise VerificationError(self)
        return self

    def to_list(self) -> list[dict[str, Any]]:
        return [ch.to_dict() for ch in self.checks]

    def summary(self) -> str:
        lines = []
        for ch in self.checks:
            wit = ", ".join(f"{k}={v}" for k, v in ch.witness.items())
            lines.append(f"[{ch.status:4}] {ch.check_id}: {wit}")
        return "\n".join(lines)
