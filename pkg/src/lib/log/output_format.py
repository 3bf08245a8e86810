"""Output format enumeration"""

from enum import Enum


class OutputFormat(Enum):
    """How results and verification reports are written to stdout"""

    TEXT = "text"
    JSON = "json"
    YAML = "yaml"

    @classmethod
    def _lookup(cls, value: object) -> "OutputFormat | None":
        return cls._value2member_map_.get(str(value).strip().lower())  # type: ignore[return-value]

    @classmethod
    def is_valid_string(cls, value: str | None) -> bool:
        return value is not None and cls._lookup(value) is not None

    @classmethod
    def from_string(cls, value: "str | OutputFormat | None") -> "OutputFormat":
        """Case-insensitive lookup, TEXT when unknown"""
        if isinstance(value, cls):
            return value
        if value is None:
            return cls.TEXT
        return cls._lookup(value) or cls.TEXT
