"""mu_n and gamma_n reduce to ss_p at every prime of degree n"""

import time
from typing import Any

from algebra.field_context import FieldContext
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from supersingular.mu_gamma import Kind, expected_degree, mu_gamma
from supersingular.universal_check import PolyProvider, universal_check
from verifiers.base_verifier import BaseVerifier


class UniversalVerifier(BaseVerifier):
    suite = "universal"

    def __init__(self, logger: Logger, provider: PolyProvider = mu_gamma):
        super().__init__(logger)
        self.provider = provider
        self.rows: list[dict[str, Any]] = []

    def run(self, ctx: FieldContext, max_n: int) -> None:
        self.rows = []
        bound = ctx.limits.max_field_size
        for n in range(1, max_n + 1):
            # the oracle scans F_(q^n) and builds phi_p over F_(q^(2n))
            if ctx.q ** (2 * n) > bound:
                self.logger.log(LogLevel.INFO, f"{self.suite}: stopping at n = {n - 1}, q^{2 * n} > {bound}")
                break
            for kind in Kind:
                started = time.perf_counter()
                degree = self.provider(ctx, n, kind).degree()
                expected = expected_degree(ctx.q, n)
                self.record(
                    f"deg {kind.value}_{n}",
                    degree == expected,
                    "universal-degree",
                    f"deg {kind.value}_{n} = {degree}, expected {expected}",
                    started,
                )
            started = time.perf_counter()
            for entry in universal_check(ctx, n, self.provider):
                self.rows.append(entry.to_dict())
                self.record(
                    f"p={entry.prime}",
                    entry.passed,
                    "universal-congruence",
                    f"ss_p = {entry.oracle.ss}, mu_{n} mod p = {entry.mu_mod_p}, gamma_{n} mod p = {entry.gamma_mod_p}",
                    started,
                )
                self.record(
                    f"p={entry.prime} parity",
                    entry.parity_holds,
                    "universal-parity",
                    f"0 in U_p is {entry.oracle.contains_zero()} for deg p = {entry.degree}",
                )
                started = time.perf_counter()
