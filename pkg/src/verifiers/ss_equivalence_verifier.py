"""The p_n criterion against the kernel computation, prime by prime"""

import time

from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from algebra.irreducible import monic_irreducibles
from drinfeld.drinfeld_module import bassa_beelen, is_supersingular, legendre, reduce_at
from lib.log.log_level import LogLevel
from series.legendre_ss import legendre_ss_by_pn
from verifiers.base_verifier import BaseVerifier


class SsEquivalenceVerifier(BaseVerifier):
    suite = "ss-equivalence"

    def run(self, ctx: FieldContext, max_n: int) -> None:
        bound = ctx.limits.max_field_size
        for n in range(1, max_n + 1):
            if ctx.q**n > bound:
                self.logger.log(LogLevel.INFO, f"{self.suite}: stopping at deg p = {n - 1}, q^{n} > {bound}")
                break
            for prime in monic_irreducibles(ctx, n):
                if prime == FqPoly.T(ctx):
                    continue
                self._check_prime(ctx, prime)

    def _check_prime(self, ctx: FieldContext, prime: FqPoly) -> None:
        """Every Delta != 0 of degree < deg p, so Delta is a unit mod p"""
        started = time.perf_counter()
        disagreements = []
        for k in range(1, ctx.q ** prime.deg()):
            delta = FqPoly.from_int(ctx, k)
            by_pn = legendre_ss_by_pn(delta, prime)
            by_kernel = is_supersingular(reduce_at(legendre(delta), prime), prime)
            by_twin = is_supersingular(reduce_at(bassa_beelen(delta), prime), prime)
            if not by_pn == by_kernel == by_twin:
                disagreements.append(f"Delta={delta}: p_n {by_pn}, kernel {by_kernel}, twin {by_twin}")
        self.record(
            f"p={prime}",
            not disagreements,
            "ss-equivalence",
            "; ".join(disagreements),
            started,
        )
