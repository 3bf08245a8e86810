"""Processor for partial sums of the Legendre period"""

from algebra.field_context import FieldContext
from algebra.rat_func import RatFunc
from drinfeld.drinfeld_module import legendre
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from lib.parser import PolynomialParser, format_kummer, format_q
from series.periods import period_partial, period_partial_exact, period_residual


class ProcessPeriod:
    def __init__(self, logger: Logger):
        self.logger = logger

    def process(self, ctx: FieldContext, delta_text: str, n_terms: int, exact: bool = False) -> int:
        """Term valuations of the partial sum and the valuation of the exponential at it"""
        delta = PolynomialParser(ctx).parse_poly(delta_text)
        dm = legendre(delta)
        approximation = period_partial(dm, n_terms)
        self.logger.log(LogLevel.DEBUG, f"period terms resolved at precision u^{approximation.precision}")
        residual = period_residual(dm, n_terms)
        fields = {
            "q": format_q(ctx),
            "delta": str(delta),
            "terms": n_terms,
            "term_valuations": [
                {"n": n, "valuation": str(v)} for n, v in enumerate(approximation.term_valuations)
            ],
            "residual_valuation": str(residual),
        }
        if exact:
            exact_sum = period_partial_exact(dm, n_terms)
            coeffs = [c if isinstance(c, RatFunc) else None for c in exact_sum.value.coeffs]
            fields["exact_value"] = format_kummer(coeffs)
            fields["exact_agrees"] = exact_sum.value.expand(approximation.precision or 0).agrees_with(
                approximation.value
            )
        self.logger.logResult("period", fields)
        return 0
