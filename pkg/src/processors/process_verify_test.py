import pytest

from algebra.field_context import FieldContext, make_context
from algebra.fq_poly import FqPoly
from lib.errors import VerificationFailure
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from processors.process_verify import ProcessVerify
from supersingular.j_poly import JPoly
from supersingular.mu_gamma import Kind, mu_gamma

F2 = make_context(2)


def wrong_gamma_2(ctx: FieldContext, n: int, kind: Kind) -> JPoly:
    value = mu_gamma(ctx, n, Kind.MU)
    if kind is Kind.GAMMA and n == 2:
        return JPoly.of(ctx, {e: c + FqPoly.one(ctx) if e == 0 else c for e, c in value})
    return value


class TestProcessVerify:
    @pytest.fixture
    def logger(self) -> Logger:
        """Create a test logger"""
        return Logger(LogLevel.DEBUG)

    def test_selected_suite(self, logger: Logger) -> None:
        """Only the partitions suite runs, no universal rows"""
        assert ProcessVerify(logger, seed=1, samples=2).process(F2, 2, ["partitions"]) == 0
        (result,) = logger.results
        assert result.fields == {"q": "2", "max_n": 2, "suites": ["partitions"]}
        assert len(logger.check_entries) == 9
        assert {entry.suite for entry in logger.check_entries} == {"partitions"}

    def test_suite_order_is_fixed(self, logger: Logger) -> None:
        """Suites run in their canonical order whatever the order asked for"""
        ProcessVerify(logger, seed=1, samples=2).process(F2, 1, ["partitions", "series"])
        suites = [entry.suite for entry in logger.check_entries]
        assert logger.results[0].fields["suites"] == ["series", "partitions"]
        assert suites.index("partitions") > max(i for i, s in enumerate(suites) if s == "series")

    def test_universal_rows(self, logger: Logger) -> None:
        """One row per prime of degree 1 and 2 over F_2"""
        ProcessVerify(logger, seed=1, samples=2).process(F2, 2, ["universal"])
        rows = logger.results[0].fields["universal"]
        assert [row["prime"] for row in rows] == ["T", "T+1", "T^2+T+1"]
        assert all(row["pass"] for row in rows)

    def test_failure_is_raised_after_the_report(self, logger: Logger) -> None:
        """The report is buffered before VerificationFailure propagates"""
        process_verify = ProcessVerify(logger, seed=1, samples=2, provider=wrong_gamma_2)
        with pytest.raises(VerificationFailure, match="1 of 10 checks failed") as exc_info:
            process_verify.process(F2, 2, ["universal"])
        assert exc_info.value.exit_code == 1
        assert len(logger.results) == 1
        assert [m.rule for m in logger.messages] == ["universal-congruence"]
        assert logger.failure_count() == 1
