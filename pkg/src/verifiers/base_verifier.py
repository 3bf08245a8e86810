"""Shared bookkeeping of the verification suites"""

import time
from abc import ABC, abstractmethod

from algebra.field_context import FieldContext
from lib.log.log_level import LogLevel
from lib.log.logger import Logger


class BaseVerifier(ABC):
    """A suite logs one check entry per check and a rule message per failure"""

    suite: str = ""

    def __init__(self, logger: Logger):
        self.logger = logger
        self.checks = 0
        self.failures = 0

    def record(self, subject: str, passed: bool, rule: str, message: str = "", started: float | None = None) -> bool:
        elapsed = time.perf_counter() - started if started is not None else None
        self.checks += 1
        self.logger.logCheckEntry(self.suite, subject, passed, "" if passed else message, elapsed)
        if not passed:
            self.failures += 1
            self.logger.logRule(LogLevel.ERROR, rule, message, subject=f"{self.suite} {subject}")
        return passed

    def verify(self, ctx: FieldContext, max_n: int) -> tuple[int, int]:
        """Returns (checks, failures) of this run"""
        self.checks = 0
        self.failures = 0
        started = time.perf_counter()
        self.run(ctx, max_n)
        self.logger.log(
            LogLevel.INFO,
            "%s: %d checks, %d failures in %.2fs",
            self.suite,
            self.checks,
            self.failures,
            time.perf_counter() - started,
        )
        return self.checks, self.failures

    @abstractmethod
    def run(self, ctx: FieldContext, max_n: int) -> None:
        pass
