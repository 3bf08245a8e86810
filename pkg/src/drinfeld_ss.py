#!/usr/bin/env python3
"""
Command line entry point of drinfeld-ss
"""

import sys
from collections.abc import Sequence

from algebra.field_context import FieldContext, context_from_text
from lib.arguments import Arguments
from lib.cache import PolynomialCache
from lib.config import Config, load_config
from lib.errors import DrinfeldSsError
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from lib.log.output_format import OutputFormat
from processors.process_period import ProcessPeriod
from processors.process_series import ProcessSeries
from processors.process_supersingular import ProcessSupersingular
from processors.process_verify import ProcessVerify
from series.period_coefficients import Mode
from supersingular.mu_gamma import Kind

try:
    from _version import version as DRINFELD_SS_VERSION
except ImportError:
    DRINFELD_SS_VERSION = "dev"


logger = Logger(LogLevel.INFO, OutputFormat.TEXT)


def run(arguments: Arguments, config: Config) -> int:
    """Dispatch one command; returns its exit status"""
    cache = PolynomialCache(logger, config.cache_dir, config.use_cache)
    process_supersingular = ProcessSupersingular(logger, cache)
    if arguments.command == "partitions":
        assert arguments.n is not None
        return process_supersingular.process_partitions(arguments.n, config.max_partition_length)

    assert arguments.q is not None
    ctx: FieldContext = context_from_text(arguments.q, config.limits())
    logger.log(LogLevel.DEBUG, f"working over F_{ctx.q} = F_{ctx.p}^{ctx.e}")

    if arguments.command in ("pn", "bn"):
        assert arguments.n is not None
        return ProcessSeries(logger, cache).process(ctx, arguments.command, arguments.n, Mode.from_string(arguments.mode))
    if arguments.command in ("mu", "gamma"):
        assert arguments.n is not None
        return process_supersingular.process_universal(ctx, arguments.n, Kind(arguments.command))
    if arguments.command == "ss":
        assert arguments.prime is not None
        return process_supersingular.process_ss(ctx, arguments.prime)
    if arguments.command == "sstest":
        assert arguments.prime is not None and arguments.delta is not None
        return process_supersingular.process_sstest(ctx, arguments.prime, arguments.delta)
    if arguments.command == "period":
        assert arguments.delta is not None and arguments.terms is not None
        return ProcessPeriod(logger).process(ctx, arguments.delta, arguments.terms, arguments.exact)

    assert arguments.max_n is not None
    process_verify = ProcessVerify(
        logger, config.seed, config.random_samples, provider=process_supersingular.universal_poly
    )
    return process_verify.process(ctx, arguments.max_n, arguments.suites)


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point of drinfeld-ss"""
    arguments, return_code = Arguments.parse_arguments(logger, DRINFELD_SS_VERSION, argv)
    if return_code != 0:
        return return_code

    config = load_config(logger, arguments)

    try:
        return_code = run(arguments, config)
    except DrinfeldSsError as e:
        logger.log(LogLevel.ERROR, "%s: %s", type(e).__name__, e)
        return_code = e.exit_code
    finally:
        # Flush buffered results and check entries
        logger.flush()

    return return_code


if __name__ == "__main__":
    ret = main()
    sys.exit(ret)
