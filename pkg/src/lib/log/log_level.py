import logging
from enum import Enum

RESET = "\033[0m"
RED = "\033[31m"
YELLOW = "\033[33m"
GREEN = "\033[32m"
BLUE = "\033[34m"
GRAY = "\033[90m"

_SYNONYMS = {
    "ERR": "ERROR",
    "WARN": "WARNING",
    "INFORMATION": "INFO",
    "DBG": "DEBUG",
    "VERBOSE": "DEBUG",
}


class LogLevel(Enum):
    """Verbosity of the diagnostic channel, most severe first"""

    ERROR = 0
    WARNING = 1
    INFO = 2
    DEBUG = 3

    @classmethod
    def _key(cls, value: object) -> str:
        key = str(value).strip().upper()
        return _SYNONYMS.get(key, key)

    @classmethod
    def from_string(cls, value: "str | LogLevel | None") -> "LogLevel":
        """Case-insensitive lookup accepting common abbreviations, INFO when unknown"""
        if isinstance(value, cls):
            return value
        if value is None:
            return cls.INFO
        return cls.__members__.get(cls._key(value), cls.INFO)

    @classmethod
    def is_valid_string(cls, value: str | None) -> bool:
        return value is not None and cls._key(value) in cls.__members__

    def to_python_level(self) -> int:
        return {
            LogLevel.ERROR: logging.ERROR,
            LogLevel.WARNING: logging.WARNING,
            LogLevel.INFO: logging.INFO,
            LogLevel.DEBUG: logging.DEBUG,
        }[self]

    @staticmethod
    def from_python_level(level: int) -> "LogLevel":
        if level >= logging.ERROR:
            return LogLevel.ERROR
        if level >= logging.WARNING:
            return LogLevel.WARNING
        if level >= logging.INFO:
            return LogLevel.INFO
        return LogLevel.DEBUG

    def get_level_color(self) -> str:
        return {
            LogLevel.ERROR: RED,
            LogLevel.WARNING: YELLOW,
            LogLevel.INFO: BLUE,
            LogLevel.DEBUG: GRAY,
        }.get(self, RESET)

    def __str__(self) -> str:
        return "WARN" if self is LogLevel.WARNING else self.name
