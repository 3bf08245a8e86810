"""Processor for mu_n, gamma_n, ss_p, the two supersingularity verdicts and P_2(n)"""

from algebra.field_context import FieldContext
from drinfeld.drinfeld_module import is_supersingular, legendre, reduce_at
from lib.cache import PolynomialCache
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from lib.parser import PolynomialParser, format_q, series_pairs
from series.legendre_ss import legendre_ss_by_pn
from supersingular.j_poly import JPoly
from supersingular.mu_gamma import Kind, mu_gamma
from supersingular.shadowed_partitions import enum_p2
from supersingular.ss_oracle import ss_oracle


class ProcessSupersingular:
    def __init__(self, logger: Logger, cache: PolynomialCache):
        self.logger = logger
        self.cache = cache

    def universal_poly(self, ctx: FieldContext, n: int, kind: Kind) -> JPoly:
        """mu_n or gamma_n through the cache; usable as a universal_check provider"""
        return self.cache.get_or_compute(ctx, n, kind.value, lambda: mu_gamma(ctx, n, kind))

    def process_universal(self, ctx: FieldContext, n: int, kind: Kind) -> int:
        value = self.universal_poly(ctx, n, kind)
        self.logger.logResult(
            kind.value,
            {
                "q": format_q(ctx),
                "n": n,
                "degree": value.degree(),
                "value": str(value),
                "terms": series_pairs(value),
            },
            text_keys=("value",),
        )
        return 0

    def process_ss(self, ctx: FieldContext, prime_text: str) -> int:
        prime = PolynomialParser(ctx).parse_poly(prime_text)
        result = ss_oracle(prime)
        self.logger.log(
            LogLevel.DEBUG, f"scanned {result.field.size} j-invariants, {len(result.supersingular)} supersingular"
        )
        self.logger.logResult(
            "ss",
            {
                "q": format_q(ctx),
                "prime": str(prime),
                "degree": result.degree,
                "|U|": len(result.supersingular),
                "contains_zero": result.contains_zero(),
                "ss": str(result.ss),
            },
        )
        return 0

    def process_sstest(self, ctx: FieldContext, prime_text: str, delta_text: str) -> int:
        """Both verdicts for the Legendre module of Delta at p; 1 when they disagree"""
        parser = PolynomialParser(ctx)
        prime = parser.parse_poly(prime_text)
        delta = parser.parse_poly(delta_text)
        by_pn = legendre_ss_by_pn(delta, prime)
        by_kernel = is_supersingular(reduce_at(legendre(delta), prime), prime)
        agreement = by_pn == by_kernel
        if not agreement:
            self.logger.logRule(
                LogLevel.ERROR,
                "ss-equivalence",
                f"p_n criterion says {by_pn}, kernel says {by_kernel}",
                subject=f"p={prime} Delta={delta}",
            )
        self.logger.logResult(
            "sstest",
            {
                "q": format_q(ctx),
                "prime": str(prime),
                "delta": str(delta),
                "supersingular_by_pn": by_pn,
                "supersingular_by_kernel": by_kernel,
                "agreement": agreement,
            },
            text_keys=("supersingular_by_pn", "supersingular_by_kernel", "agreement"),
        )
        return 0 if agreement else 1

    def process_partitions(self, n: int, max_length: int) -> int:
        pairs = enum_p2(n, max_length)
        rows = [{"S1": repr(pair.s1), "S2": repr(pair.s2), "tiling": pair.tiling()} for pair in pairs]
        self.logger.logResult("partitions", {"n": n, "count": len(pairs), "partitions": rows})
        return 0
