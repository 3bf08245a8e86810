"""Processor for the coefficient families p_n and b_n"""

from algebra.field_context import FieldContext
from lib.cache import PolynomialCache
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from lib.parser import format_q, series_pairs
from series.period_coefficients import Mode, bn, pn
from series.series_poly import SeriesPoly


class ProcessSeries:
    """Compute p_n(x) or b_n(D) and log the result document"""

    def __init__(self, logger: Logger, cache: PolynomialCache):
        self.logger = logger
        self.cache = cache

    def compute(self, ctx: FieldContext, kind: str, n: int, mode: Mode) -> SeriesPoly:
        family = pn if kind == "pn" else bn
        if mode is Mode.RECURSIVE:
            return family(ctx, n, Mode.RECURSIVE)
        # the cache holds the closed form only
        return self.cache.get_or_compute(ctx, n, kind, lambda: family(ctx, n, Mode.CLOSED))

    def process(self, ctx: FieldContext, kind: str, n: int, mode: Mode) -> int:
        """Returns the exit status"""
        value = self.compute(ctx, kind, n, mode)
        self.logger.log(LogLevel.DEBUG, f"{kind}_{n} over F_{ctx.q} has {len(value)} terms")
        self.logger.logResult(
            kind,
            {
                "q": format_q(ctx),
                "n": n,
                "mode": mode.value,
                "value": str(value),
                "terms": series_pairs(value),
            },
            text_keys=("value",),
        )
        return 0
