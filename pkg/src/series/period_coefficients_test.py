"""Unit tests for b_n, p_n and a_n"""

import pytest

from algebra.brackets import bracket
from algebra.field_context import FieldContext, make_context
from algebra.rat_func import RatFunc
from lib.errors import PreconditionError
from series.period_coefficients import Mode, an, an_at, bn, pn, specialize
from series.series_poly import SeriesPoly


class TestMode:
    """Mode names on the command line"""

    @pytest.mark.parametrize(
        "text,mode", [("rec", Mode.RECURSIVE), ("Recursive", Mode.RECURSIVE), ("closed", Mode.CLOSED)]
    )
    def test_from_string(self, text: str, mode: Mode) -> None:
        """Case insensitive"""
        assert Mode.from_string(text) is mode

    def test_unknown(self) -> None:
        """Anything else is a usage problem"""
        with pytest.raises(PreconditionError):
            Mode.from_string("fast")


class TestPn:
    """p_n(x) by recursion and by the subset sum"""

    def test_p2_over_f2(self) -> None:
        """p_2 = x^3 + T^-1 x^2 + x + 1 for q = 2"""
        ctx = make_context(2)
        assert str(pn(ctx, 2)) == "x^3+T^-1*x^2+x+1"
        assert str(pn(ctx, 2, Mode.RECURSIVE)) == "x^3+T^-1*x^2+x+1"

    def test_small_indices(self) -> None:
        """p_-1 = 0, p_0 = 1, p_1 = x - 1"""
        ctx = make_context(3)
        assert pn(ctx, -1).is_zero()
        assert pn(ctx, 0) == SeriesPoly.one(ctx, "x")
        assert str(pn(ctx, 1)) == "x+2"
        with pytest.raises(PreconditionError):
            pn(ctx, -2)
        with pytest.raises(PreconditionError):
            bn(ctx, -1)

    @pytest.mark.parametrize("p,e,n_max", [(2, 1, 6), (3, 1, 4), (2, 2, 3), (5, 1, 3)])
    def test_recursion_matches_closed_form(self, p: int, e: int, n_max: int) -> None:
        """Both computations agree term by term"""
        ctx = make_context(p, e)
        for n in range(n_max + 1):
            assert pn(ctx, n, Mode.RECURSIVE) == pn(ctx, n, Mode.CLOSED)
            assert bn(ctx, n, Mode.RECURSIVE) == bn(ctx, n, Mode.CLOSED)

    @pytest.mark.parametrize("p,n", [(2, 5), (3, 3), (7, 2)])
    def test_shape(self, p: int, n: int) -> None:
        """2^n terms, monic of degree 1 + q + ... + q^(n-1), constant term (-1)^n, T-power denominators"""
        ctx = make_context(p)
        f = pn(ctx, n)
        assert len(f) == 2**n
        assert f.degree() == (ctx.q**n - 1) // (ctx.q - 1)
        assert f.leading_coeff().is_one()
        assert f.constant_term() == RatFunc.constant(ctx, ctx.neg(1) if n % 2 else 1)
        assert all(c.has_t_power_denominator() for _, c in f)

    @pytest.mark.parametrize("p,n", [(2, 4), (3, 3)])
    def test_b_n_and_p_n(self, p: int, n: int) -> None:
        """(-1)^n b_n(x) = p_n(-x)"""
        ctx = make_context(p)
        b = bn(ctx, n).rename("x")
        if n % 2:
            b = -b
        assert b == pn(ctx, n).negate_variable()


class TestAn:
    """a_n = T^(1 + q + ... + q^n) / L_n b_n(Delta / T^q)"""

    def test_a0(self) -> None:
        """a_0 = T"""
        ctx = make_context(3)
        scalar, b = an(ctx, 0)
        assert scalar == RatFunc.T(ctx)
        assert b == SeriesPoly.one(ctx, "D")
        assert an_at(ctx, 0, RatFunc.T(ctx)) == RatFunc.T(ctx)

    def test_a1(self) -> None:
        """a_1 = (T^(q+1) + T Delta) / [1]"""
        ctx = make_context(3)
        t = RatFunc.T(ctx)
        delta = t**2 + 1
        expected = (t**4 + t * delta) / RatFunc(bracket(ctx, 1))
        assert an_at(ctx, 1, delta) == expected

    def test_specialize(self) -> None:
        """Substitution of an element of K"""
        ctx = make_context(2)
        t = RatFunc.T(ctx)
        assert specialize(bn(ctx, 1), t) == t + 1

    def test_negative_index(self) -> None:
        """a_n needs n >= 0"""
        with pytest.raises(PreconditionError):
            an(make_context(2), -1)


def displayed(ctx: FieldContext, var: str, terms: list[tuple[int, int, int]]) -> SeriesPoly:
    """sum sign * T^t_exp * var^x_exp"""
    result = SeriesPoly(ctx, var)
    for sign, x_exp, t_exp in terms:
        c = 1 if sign > 0 else ctx.neg(1)
        result = result + SeriesPoly.monomial(ctx, var, x_exp, RatFunc.t_power(ctx, t_exp, c))
    return result


def displayed_p3(q: int) -> list[tuple[int, int, int]]:
    return [
        (1, q * q + q + 1, 0),
        (-1, q * q + q, 1 - q),
        (-1, q * q + 1, 1 - q * q),
        (1, q * q, 1 - q * q),
        (-1, q + 1, 0),
        (1, q, 1 - q),
        (1, 1, 0),
        (-1, 0, 0),
    ]


def displayed_p4(q: int) -> list[tuple[int, int, int]]:
    q2, q3 = q * q, q**3
    return [
        (1, q3 + q2 + q + 1, 0),
        (-1, q3 + q2 + q, 1 - q),
        (-1, q3 + q2 + 1, 1 - q2),
        (1, q3 + q2, 1 - q2),
        (-1, q3 + q + 1, 1 - q3),
        (1, q3 + q, 2 - q - q3),
        (1, q3 + 1, 1 - q3),
        (-1, q3, 1 - q3),
        (-1, q2 + q + 1, 0),
        (1, q2 + q, 1 - q),
        (1, q2 + 1, 1 - q2),
        (-1, q2, 1 - q2),
        (1, q + 1, 0),
        (-1, q, 1 - q),
        (-1, 1, 0),
        (1, 0, 0),
    ]


def displayed_b3(q: int) -> list[tuple[int, int, int]]:
    return [
        (1, q * q + q + 1, 0),
        (1, q * q + q, 1 - q),
        (1, q * q + 1, 1 - q * q),
        (1, q * q, 1 - q * q),
        (1, q + 1, 0),
        (1, q, 1 - q),
        (1, 1, 0),
        (1, 0, 0),
    ]


class TestDisplayedTables:
    """The closed-form lists of p_1 ... p_4 and b_0 ... b_3, instantiated at q = 2, 3, 4"""

    @pytest.fixture(params=[(2, 1), (3, 1), (2, 2)], ids=["q2", "q3", "q4"])
    def ctx(self, request: pytest.FixtureRequest) -> FieldContext:
        p, e = request.param
        return make_context(p, e)

    def test_p_n(self, ctx: FieldContext) -> None:
        """p_1 = x - 1, p_2 = x^(q+1) - T^(1-q) x^q - x + 1, then the 8 and 16 term lists"""
        q = ctx.q
        assert pn(ctx, 1) == displayed(ctx, "x", [(1, 1, 0), (-1, 0, 0)])
        assert pn(ctx, 2) == displayed(ctx, "x", [(1, q + 1, 0), (-1, q, 1 - q), (-1, 1, 0), (1, 0, 0)])
        for mode in Mode:
            assert pn(ctx, 3, mode) == displayed(ctx, "x", displayed_p3(q))
            assert pn(ctx, 4, mode) == displayed(ctx, "x", displayed_p4(q))

    def test_b_n(self, ctx: FieldContext) -> None:
        """b_0 = 1, b_1 = D + 1, b_2 = D^(q+1) + T^(1-q) D^q + D + 1, b_3 with 8 terms"""
        q = ctx.q
        assert bn(ctx, 0) == SeriesPoly.one(ctx, "D")
        assert bn(ctx, 1) == displayed(ctx, "D", [(1, 1, 0), (1, 0, 0)])
        assert bn(ctx, 2) == displayed(ctx, "D", [(1, q + 1, 0), (1, q, 1 - q), (1, 1, 0), (1, 0, 0)])
        for mode in Mode:
            assert bn(ctx, 3, mode) == displayed(ctx, "D", displayed_b3(q))
