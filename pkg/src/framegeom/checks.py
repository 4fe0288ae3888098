"""Pass/fail rows collected by validators and identity checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One verified statement.

    ``passed`` is ``None`` for rows that are informational or not
    applicable; ``detail`` holds canonical-string values and witnesses.
    """

    name: str
    passed: bool | None
    detail: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.passed is None:
            return "info"
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        return {"status": self.status, **self.detail}


@dataclass(frozen=True)
class CheckList:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __iter__(self):
        return iter(self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    def as_dict(self) -> dict:
        return {c.name: c.as_dict() for c in self.checks}
