import argparse
import os
from collections.abc import Sequence

from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from lib.log.output_format import OutputFormat

COMMANDS = ("pn", "bn", "mu", "gamma", "ss", "sstest", "partitions", "period", "verify")
SUITES = ("series", "ss-equivalence", "universal", "eisenstein", "partitions", "periods")


class Arguments:
    """
    Command line values; None means "not given" so that the config file can supply it
    """

    def __init__(
        self,
        command: str,
        q: str | None = None,
        n: int | None = None,
        mode: str = "closed",
        prime: str | None = None,
        delta: str | None = None,
        terms: int | None = None,
        exact: bool = False,
        max_n: int | None = None,
        suites: list[str] | None = None,
        config_file: str | None = None,
        log_level: LogLevel | None = None,
        output_format: OutputFormat | None = None,
        seed: int | None = None,
        cache_dir: str | None = None,
        use_cache: bool | None = None,
    ) -> None:
        self.command = command
        self.q = q
        self.n = n
        self.mode = mode
        self.prime = prime
        self.delta = delta
        self.terms = terms
        self.exact = exact
        self.max_n = max_n
        self.suites = suites
        self.config_file = config_file
        self.log_level = log_level
        self.output_format = output_format
        self.seed = seed
        self.cache_dir = cache_dir
        self.use_cache = use_cache

    @staticmethod
    def _non_negative(value: str) -> int:
        number = int(value)
        if number < 0:
            raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {value}")
        return number

    @staticmethod
    def build_parser(version: str) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "--format",
            dest="output_format",
            choices=[fmt.value for fmt in OutputFormat],
            default=None,
            help="Output format on stdout (default: text)",
        )
        common.add_argument(
            "--log-level",
            choices=[level.name for level in LogLevel],
            type=str.upper,
            default=None,
            help="Verbosity of diagnostics on stderr",
        )
        common.add_argument("--config-file", type=str, default=None, help="Path to a .drinfeld-ss.yaml file")
        common.add_argument("--cache-dir", type=str, default=None, help="Directory of the polynomial cache")
        common.add_argument(
            "--no-cache", dest="use_cache", action="store_false", default=None, help="Neither read nor write the cache"
        )
        common.add_argument("--seed", type=int, default=None, help="Seed of the randomized checks")

        with_q = argparse.ArgumentParser(add_help=False)
        with_q.add_argument("--q", required=True, help="Field size, written q or p^e")

        arg_parser = argparse.ArgumentParser(
            prog="drinfeld-ss",
            description="Exact computations with rank-2 Drinfeld modules over F_q[T]",
        )
        arg_parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
        sub = arg_parser.add_subparsers(dest="command", required=True, metavar="command")

        for name, title in (("pn", "the polynomial p_n(x)"), ("bn", "the period coefficient b_n(D)")):
            command = sub.add_parser(name, parents=[common, with_q], help=f"Compute {title}")
            command.add_argument("--n", type=Arguments._non_negative, required=True)
            command.add_argument("--mode", choices=["rec", "closed"], default="closed")
        for name in ("mu", "gamma"):
            command = sub.add_parser(name, parents=[common, with_q], help=f"Compute the polynomial {name}_n(j)")
            command.add_argument("--n", type=Arguments._non_negative, required=True)

        command = sub.add_parser("ss", parents=[common, with_q], help="Supersingular polynomial ss_p(x) by search")
        command.add_argument("--prime", required=True, help="Monic irreducible polynomial in T")

        command = sub.add_parser("sstest", parents=[common, with_q], help="Both supersingularity verdicts for Delta")
        command.add_argument("--prime", required=True)
        command.add_argument("--delta", required=True, help="Legendre parameter Delta in A")

        command = sub.add_parser("partitions", parents=[common], help="Shadowed partitions P_2(n)")
        command.add_argument("--n", type=Arguments._non_negative, required=True)

        command = sub.add_parser("period", parents=[common, with_q], help="Partial sums of the Legendre period")
        command.add_argument("--delta", required=True)
        command.add_argument("--terms", type=Arguments._non_negative, required=True)
        command.add_argument("--exact", action="store_true", help="Also compute the exact partial sum in K[c]")

        command = sub.add_parser("verify", parents=[common, with_q], help="Run the identity and congruence suites")
        command.add_argument("--max-n", type=Arguments._non_negative, required=True)
        command.add_argument("--suite", dest="suites", action="append", choices=SUITES, default=None)
        return arg_parser

    @staticmethod
    def parse_arguments(
        logger: Logger, version: str, argv: Sequence[str] | None = None
    ) -> tuple["Arguments", int]:
        """Parse command line arguments.

        Returns:
            tuple: (Arguments object, return_code) where return_code is 0 on success, 2 on validation error
        """
        args = Arguments.build_parser(version).parse_args(argv)

        # provisional, the config file may still override them
        log_level = LogLevel.from_string(args.log_level) if args.log_level else None
        logger.set_level(log_level or LogLevel.INFO)
        output_format = OutputFormat.from_string(args.output_format) if args.output_format else None
        logger.set_format(output_format or OutputFormat.TEXT)

        if args.config_file and not os.path.isfile(args.config_file):
            logger.log(LogLevel.ERROR, f"Config file '{args.config_file}' does not exist or is not a file")
            return Arguments(args.command), 2

        arguments = Arguments(
            command=args.command,
            q=getattr(args, "q", None),
            n=getattr(args, "n", None),
            mode=getattr(args, "mode", "closed"),
            prime=getattr(args, "prime", None),
            delta=getattr(args, "delta", None),
            terms=getattr(args, "terms", None),
            exact=getattr(args, "exact", False),
            max_n=getattr(args, "max_n", None),
            suites=getattr(args, "suites", None),
            config_file=args.config_file,
            log_level=log_level,
            output_format=output_format,
            seed=args.seed,
            cache_dir=args.cache_dir,
            use_cache=args.use_cache,
        )
        return arguments, 0
