"""One row of a verification report"""

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class CheckEntry:
    """Outcome of a single check; suite names the family, subject the instance"""

    suite: str
    subject: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def get_severity(self) -> int:
        """0 for passed checks, 1 for failures"""
        return 0 if self.passed else 1

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"suite": self.suite, "subject": self.subject, "status": self.status}
        if self.detail:
            data["detail"] = self.detail
        return data
