"""Identities between the two computations of p_n and b_n, and the shape of both"""

import time

from algebra.field_context import FieldContext
from algebra.rat_func import RatFunc
from drinfeld.drinfeld_module import legendre
from lib.log.log_level import LogLevel
from series.log_exp import an_recursive, log_exp_coeffs
from series.period_coefficients import Mode, an_at, bn, pn
from verifiers.base_verifier import BaseVerifier

# a_n has T-degree about q^n
AN_MAX_DEGREE = 1024


class SeriesVerifier(BaseVerifier):
    suite = "series"

    def run(self, ctx: FieldContext, max_n: int) -> None:
        sign = RatFunc.constant(ctx, ctx.neg(1))
        for n in range(max_n + 1):
            started = time.perf_counter()
            b_closed, p_closed = bn(ctx, n, Mode.CLOSED), pn(ctx, n, Mode.CLOSED)
            self.record(
                f"b_{n} rec=closed",
                bn(ctx, n, Mode.RECURSIVE) == b_closed,
                "series-recursion",
                f"recursive and closed b_{n} differ",
                started,
            )
            self.record(
                f"p_{n} rec=closed",
                pn(ctx, n, Mode.RECURSIVE) == p_closed,
                "series-recursion",
                f"recursive and closed p_{n} differ",
            )
            left = b_closed.rename("x").scale(sign) if n % 2 else b_closed.rename("x")
            self.record(
                f"(-1)^{n} b_{n}(x) = p_{n}(-x)",
                left == p_closed.negate_variable(),
                "series-identity",
                f"(-1)^{n} b_{n}(x) = {left}, p_{n}(-x) = {p_closed.negate_variable()}",
            )
            constant = RatFunc.one(ctx) if n % 2 == 0 else sign
            shape = (
                len(b_closed) == 2**n
                and len(p_closed) == 2**n
                and p_closed.leading_coeff().is_one()
                and p_closed.constant_term() == constant
                and all(c.has_t_power_denominator() for _, c in p_closed)
            )
            self.record(
                f"p_{n} shape",
                shape,
                "series-shape",
                f"p_{n} must be monic with 2^{n} terms, constant term (-1)^{n} and T-power denominators",
            )
        self._check_an(ctx, max_n)

    def _check_an(self, ctx: FieldContext, max_n: int) -> None:
        """a_n three ways: recursion, closed form at D = Delta / T^q, and T times the partial log sums"""
        last = max_n
        while ctx.q**last > AN_MAX_DEGREE:
            last -= 1
        if last < max_n:
            self.logger.log(LogLevel.INFO, f"{self.suite}: a_n checked up to n = {last}, q^{last + 1} > {AN_MAX_DEGREE}")
        max_n = last
        delta = RatFunc.T(ctx) ** 2 + 1
        recursive = an_recursive(ctx, delta, max_n)
        betas, _ = log_exp_coeffs(legendre(delta), max_n)
        partial = RatFunc.zero(ctx)
        for n in range(max_n + 1):
            partial = partial + betas[n]
            closed = an_at(ctx, n, delta)
            self.record(
                f"a_{n} at Delta={delta}",
                recursive[n] == closed == RatFunc.T(ctx) * partial,
                "an-recursion",
                f"a_{n}: recursion {recursive[n]}, closed form {closed}, T sum beta {RatFunc.T(ctx) * partial}",
            )
