"""Convergence of the Legendre period partial sums"""

import math
import time

from algebra.field_context import FieldContext
from algebra.rat_func import RatFunc
from drinfeld.drinfeld_module import legendre
from series.periods import period_partial, period_partial_exact, period_residual
from verifiers.base_verifier import BaseVerifier

EXACT_MAX_TERMS = 4


class PeriodsVerifier(BaseVerifier):
    suite = "periods"

    def run(self, ctx: FieldContext, max_n: int) -> None:
        # in F_1* for every q; Delta = T^2 has a_1(n) = 0 for odd n when q = 2
        dm = legendre(RatFunc.T(ctx) ** 2 + 1)
        precision_terms = int(math.log(ctx.limits.max_precision, ctx.q)) - 2
        n_hi = max(1, min(2 * (max_n + 1), ctx.limits.max_period_terms, precision_terms))
        n_lo = max(1, n_hi // 2)

        started = time.perf_counter()
        approximation = period_partial(dm, n_hi)
        valuations = approximation.term_valuations
        self.record(
            f"Delta={dm.delta} term valuations",
            all(valuations[n] < valuations[n + 1] for n in range(3, len(valuations) - 1)),
            "period-terms",
            f"term valuations {[str(v) for v in valuations]} do not increase from n = 3",
            started,
        )
        if n_lo < n_hi:
            started = time.perf_counter()
            low, high = period_residual(dm, n_lo), period_residual(dm, n_hi)
            self.record(
                f"Delta={dm.delta} residual N={n_lo},{n_hi}",
                high > low,
                "period-residual",
                f"v(exp(w_N)) is {low} at N = {n_lo} and {high} at N = {n_hi}",
                started,
            )
        n_exact = min(n_hi, EXACT_MAX_TERMS)
        started = time.perf_counter()
        exact = period_partial_exact(dm, n_exact)
        series = period_partial(dm, n_exact)
        self.record(
            f"Delta={dm.delta} exact N={n_exact}",
            exact.value.expand(series.precision or 0).agrees_with(series.value),
            "period-exact",
            f"the exact partial sum with {n_exact} terms disagrees with its expansion",
            started,
        )
