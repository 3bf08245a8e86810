"""Unit tests for FieldContext and the parser of q"""

import pytest

from algebra.field_context import FieldContext, Limits, context_from_text, make_context, parse_q
from lib.errors import PreconditionError, ResourceBoundError, UsageError


class TestParseQ:
    """q given as a prime power or as p^e"""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("2", (2, 1)),
            ("4", (2, 2)),
            ("9", (3, 2)),
            ("3^2", (3, 2)),
            (" 5 ", (5, 1)),
            ("2^5", (2, 5)),
        ],
    )
    def test_valid(self, text: str, expected: tuple[int, int]) -> None:
        """Both notations give (p, e)"""
        assert parse_q(text) == expected

    @pytest.mark.parametrize("text", ["6", "1", "0", "4^2", "x", "2^0", ""])
    def test_invalid(self, text: str) -> None:
        """Non prime powers, composite bases and garbage are usage errors"""
        with pytest.raises(UsageError):
            parse_q(text)


class TestMakeContext:
    """Construction, caching and bounds"""

    def test_identical_arguments_share_the_context(self) -> None:
        """The context is cached, so polynomials built on it compare by identity of ctx"""
        assert make_context(3) is make_context(3)
        assert context_from_text("3^1") is make_context(3, 1)

    def test_prime_field_tables(self) -> None:
        """F_5 arithmetic is arithmetic mod 5"""
        ctx = make_context(5)
        assert ctx.q == 5
        assert ctx.add(3, 4) == 2
        assert ctx.mul(3, 4) == 2
        assert ctx.neg(2) == 3
        assert ctx.inv(2) == 3
        assert ctx.pow(2, 4) == 1
        assert ctx.pow(2, -1) == 3
        assert ctx.sub(1, 3) == 3

    def test_extension_tables(self) -> None:
        """F_4 = F_2[u]/(u^2+u+1) with u encoded as 2"""
        ctx = make_context(2, 2)
        u = ctx.generator()
        assert u == 2
        assert ctx.mul(u, u) == 3
        assert ctx.add(u, 3) == 1
        assert ctx.inv(u) == 3
        assert ctx.frobenius_p(u) == 3
        assert ctx.frobenius_p(u, 2) == u
        assert ctx.coords(3) == [1, 1]
        assert ctx.from_coords([1, 1]) == 3

    def test_inverse_of_zero(self) -> None:
        """0 has no inverse"""
        with pytest.raises(ZeroDivisionError):
            make_context(3).inv(0)

    def test_prime_field_has_no_generator(self) -> None:
        """u only exists for e > 1"""
        with pytest.raises(PreconditionError):
            make_context(3).generator()

    @pytest.mark.parametrize("p,e", [(4, 1), (1, 1), (3, 0)])
    def test_invalid_characteristic_or_degree(self, p: int, e: int) -> None:
        """p must be prime and e positive"""
        with pytest.raises(PreconditionError):
            make_context(p, e)

    def test_q_bound(self) -> None:
        """q above max_q is a resource bound error"""
        with pytest.raises(ResourceBoundError):
            make_context(2, 7)
        assert isinstance(make_context(2, 7, Limits(max_q=128)), FieldContext)
