"""Unit tests for FqPoly"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.field_context import Limits, make_context
from algebra.fq_poly import DegreeBoundError, FqPoly
from algebra.infinity import NEG_INF
from lib.errors import InternalError

F2 = make_context(2)
F3 = make_context(3)
F4 = make_context(2, 2)

coefficients = st.lists(st.integers(min_value=0, max_value=2), max_size=8)


def poly(ctx, *coeffs: int) -> FqPoly:
    """Coefficients from the constant term upwards"""
    return FqPoly.from_coeffs(ctx, coeffs)


class TestFqPolyBasics:
    """Canonical form and inspection"""

    def test_zero_coefficients_are_dropped(self) -> None:
        """Representation is canonical, so equality is structural"""
        f = FqPoly(F3, {0: 3, 2: 4, 5: 0})
        assert f.terms == {2: 1}
        assert f == FqPoly.monomial(F3, 2)

    def test_degree(self) -> None:
        """The zero polynomial has degree -oo and no integer degree"""
        assert FqPoly.zero(F3).degree() == NEG_INF
        assert poly(F3, 1, 0, 2).degree() == 2
        with pytest.raises(ValueError):
            FqPoly.zero(F3).deg()

    def test_negative_degree_rejected(self) -> None:
        """Exponents are >= 0"""
        with pytest.raises(ValueError):
            FqPoly(F3, {-1: 1})

    def test_int_encoding(self) -> None:
        """Base-q digits are the coefficients"""
        f = poly(F3, 2, 0, 1)
        assert f.to_int() == 2 + 9
        assert FqPoly.from_int(F3, 11) == f

    def test_compare_with_int(self) -> None:
        """Constants compare equal to their integer"""
        assert FqPoly.one(F3) == 1
        assert FqPoly.zero(F3) == 0
        assert FqPoly.constant(F3, 2) == 5

    def test_different_fields_do_not_mix(self) -> None:
        """Arithmetic across contexts is refused"""
        with pytest.raises(ValueError):
            FqPoly.T(F2) + FqPoly.T(F3)

    def test_str(self) -> None:
        """Canonical text in decreasing degree"""
        assert str(poly(F3, 1, 2, 1)) == "T^2+2*T+1"
        assert str(poly(F4, 2, 1)) == "T+u"


class TestFqPolyArithmetic:
    """Ring operations and division"""

    def test_characteristic_two(self) -> None:
        """(T+1)^2 = T^2+1 over F_2"""
        f = poly(F2, 1, 1)
        assert f * f == poly(F2, 1, 0, 1)
        assert f**2 == poly(F2, 1, 0, 1)
        assert f + f == 0

    def test_power_matches_repeated_product(self) -> None:
        """Power through base-p digits"""
        f = poly(F3, 1, 2, 0, 1)
        expected = FqPoly.one(F3)
        for _ in range(7):
            expected = expected * f
        assert f**7 == expected
        assert FqPoly.zero(F3) ** 4 == FqPoly.zero(F3)
        assert FqPoly.zero(F3) ** 0 == FqPoly.one(F3)

    def test_frobenius(self) -> None:
        """f^(q^k) = f(T^(q^k))"""
        f = poly(F3, 2, 1)
        assert f.frobenius(1) == f**3
        assert f.frobenius(2) == FqPoly.monomial(F3, 9) + 2

    def test_divmod(self) -> None:
        """T^3+1 = (T+1)(T^2+2T+1) over F_3"""
        a = poly(F3, 1, 0, 0, 1)
        b = poly(F3, 1, 1)
        quotient, remainder = a.divmod(b)
        assert quotient == poly(F3, 1, 2, 1)
        assert remainder == 0

    def test_exact_div_with_remainder(self) -> None:
        """An exact division that is not exact is an internal error"""
        with pytest.raises(InternalError):
            poly(F3, 1, 0, 1).exact_div(poly(F3, 0, 1))

    def test_division_by_zero(self) -> None:
        """Division by the zero polynomial"""
        with pytest.raises(ZeroDivisionError):
            poly(F3, 1, 1).divmod(FqPoly.zero(F3))

    def test_gcd(self) -> None:
        """gcd is monic"""
        a = poly(F3, 2, 0, 2)  # 2(T^2+1)
        b = poly(F3, 1, 0, 1) * poly(F3, 1, 1)
        assert a.gcd(b) == poly(F3, 1, 0, 1)
        assert poly(F3, 0, 0, 1).gcd(poly(F3, 0, 1, 1)) == FqPoly.T(F3)
        assert FqPoly.zero(F3).gcd(FqPoly.zero(F3)) == 0

    def test_evaluate(self) -> None:
        """Value at an element of F_q"""
        assert poly(F3, 1, 1, 1).evaluate(1) == 0
        assert poly(F3, 1, 1, 1).evaluate(2) == 1

    def test_degree_bound(self) -> None:
        """Products above max_degree raise"""
        ctx = make_context(2, 1, Limits(max_degree=10))
        f = FqPoly.from_coeffs(ctx, [1] * 7)
        with pytest.raises(DegreeBoundError):
            f * f
        with pytest.raises(DegreeBoundError):
            FqPoly.T(ctx).frobenius(4)

    def test_dense_product_matches_sparse(self) -> None:
        """Large products switch to convolution without changing the result"""
        f = FqPoly.from_coeffs(F3, [(i * i + 1) % 3 for i in range(100)])
        g = FqPoly.from_coeffs(F3, [(2 * i + 1) % 3 for i in range(90)])
        expected = FqPoly.zero(F3)
        for deg, c in g:
            expected = expected + f.scale(c).shift(deg)
        assert f * g == expected

    @settings(derandomize=True, max_examples=50)
    @given(a=coefficients, b=coefficients)
    def test_division_identity(self, a: list[int], b: list[int]) -> None:
        """a = quotient * b + remainder with deg remainder < deg b"""
        fa, fb = poly(F3, *a), poly(F3, *b)
        if fb.is_zero():
            return
        quotient, remainder = fa.divmod(fb)
        assert quotient * fb + remainder == fa
        assert remainder.degree() < fb.degree()

    @settings(derandomize=True, max_examples=50)
    @given(a=coefficients, b=coefficients, c=coefficients)
    def test_distributive(self, a: list[int], b: list[int], c: list[int]) -> None:
        """a (b + c) = a b + a c"""
        fa, fb, fc = poly(F3, *a), poly(F3, *b), poly(F3, *c)
        assert fa * (fb + fc) == fa * fb + fa * fc
