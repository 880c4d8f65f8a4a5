"""Pass/fail records shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    suite: str
    identity: str
    k: int | None
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = "" if self.k is None else f" k={self.k}"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}: {self.identity}{where}{tail}"

    def as_record(self) -> dict:
        return {
            "suite": self.suite,
            "identity": self.identity,
            "k": None if self.k is None else str(self.k),
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, suite: str, identity: str, k: int | None, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(suite, identity, k, bool(passed), detail))

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def select(self, identity: str) -> list[Check]:
        return [c for c in self.checks if c.identity == identity]

    def __len__(self):
        return len(self.checks)

    def __iter__(self):
        return iter(self.checks)
