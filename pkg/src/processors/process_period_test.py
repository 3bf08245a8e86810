import pytest

from algebra.field_context import make_context
from lib.errors import ParseError, PreconditionError
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from processors.process_period import ProcessPeriod


class TestProcessPeriod:
    @pytest.fixture
    def logger(self) -> Logger:
        """Create a test logger"""
        return Logger(LogLevel.DEBUG)

    def test_term_valuations(self, logger: Logger) -> None:
        """q = 3, Delta = T^2: v(a_1(n)) = -1 and v(c) = 1/2"""
        assert ProcessPeriod(logger).process(make_context(3), "T^2", 3, exact=True) == 0
        fields = logger.results[0].fields
        assert fields["delta"] == "T^2"
        assert fields["term_valuations"] == [
            {"n": 0, "valuation": "-1/2"},
            {"n": 1, "valuation": "1/2"},
            {"n": 2, "valuation": "7/2"},
            {"n": 3, "valuation": "25/2"},
        ]
        assert fields["exact_agrees"] is True
        assert isinstance(fields["exact_value"], str)

    def test_without_exact(self, logger: Logger) -> None:
        """Exact fields only on request"""
        ProcessPeriod(logger).process(make_context(2), "T^2+1", 2)
        fields = logger.results[0].fields
        assert "exact_value" not in fields
        assert [row["valuation"] for row in fields["term_valuations"]] == ["0", "3", "3"]

    def test_vanishing_terms(self, logger: Logger) -> None:
        """q = 2, Delta = T^2: the odd terms are zero and reported as +inf"""
        assert ProcessPeriod(logger).process(make_context(2), "T^2", 3, exact=True) == 0
        fields = logger.results[0].fields
        assert [row["valuation"] for row in fields["term_valuations"]] == ["0", "+inf", "3", "+inf"]
        assert fields["exact_agrees"] is True

    def test_errors(self, logger: Logger) -> None:
        """Unparsable Delta and a module outside F_1*"""
        with pytest.raises(ParseError):
            ProcessPeriod(logger).process(make_context(3), "T^-1", 2)
        with pytest.raises(PreconditionError):
            ProcessPeriod(logger).process(make_context(3), "T", 2)
