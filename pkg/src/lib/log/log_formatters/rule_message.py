from typing import Any

from lib.log.log_level import LogLevel


class RuleMessage:
    """A failed check, identified by a kebab-case rule id"""

    def __init__(
        self,
        level: LogLevel,
        rule: str,
        message: str,
        subject: str | None = None,
        **kwargs: Any,
    ):
        self.level = level
        self.rule = rule
        self.message = message
        self.subject = subject
        self.extra = kwargs

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"level": self.level.name, "rule": self.rule}
        if self.subject is not None:
            data["subject"] = self.subject
        data["message"] = self.message
        data.update(self.extra)
        return data
