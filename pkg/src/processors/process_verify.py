"""Processor running the verification suites"""

from collections.abc import Sequence

from algebra.field_context import FieldContext
from lib.arguments import SUITES
from lib.errors import VerificationFailure
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from lib.parser import format_q
from supersingular.mu_gamma import mu_gamma
from supersingular.universal_check import PolyProvider
from verifiers.base_verifier import BaseVerifier
from verifiers.eisenstein_verifier import EisensteinVerifier
from verifiers.partitions_verifier import PartitionsVerifier
from verifiers.periods_verifier import PeriodsVerifier
from verifiers.series_verifier import SeriesVerifier
from verifiers.ss_equivalence_verifier import SsEquivalenceVerifier
from verifiers.universal_verifier import UniversalVerifier


class ProcessVerify:
    """Runs the selected suites one after the other, in the order of SUITES"""

    def __init__(self, logger: Logger, seed: int, samples: int, provider: PolyProvider = mu_gamma):
        self.logger = logger
        self.universal = UniversalVerifier(logger, provider)
        self.verifiers: dict[str, BaseVerifier] = {
            "series": SeriesVerifier(logger),
            "ss-equivalence": SsEquivalenceVerifier(logger),
            "universal": self.universal,
            "eisenstein": EisensteinVerifier(logger, seed, samples),
            "partitions": PartitionsVerifier(logger),
            "periods": PeriodsVerifier(logger),
        }

    def process(self, ctx: FieldContext, max_n: int, suites: Sequence[str] | None = None) -> int:
        """Raises VerificationFailure when any check fails, after its result is logged"""
        selected = [suite for suite in SUITES if suites is None or suite in suites]
        total_checks = 0
        total_failures = 0
        for suite in selected:
            self.logger.log(LogLevel.DEBUG, f"running suite {suite} up to n = {max_n}")
            checks, failures = self.verifiers[suite].verify(ctx, max_n)
            total_checks += checks
            total_failures += failures

        fields = {"q": format_q(ctx), "max_n": max_n, "suites": selected}
        if "universal" in selected:
            fields["universal"] = self.universal.rows
        self.logger.logResult("verify", fields)

        if total_failures > 0:
            raise VerificationFailure(f"{total_failures} of {total_checks} checks failed")
        return 0
