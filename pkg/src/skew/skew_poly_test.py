"""Unit tests for twisted polynomials"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.ext_field import build_extension, residue_field
from algebra.field_context import make_context
from algebra.fields import FunctionField
from algebra.fq_poly import FqPoly
from algebra.infinity import NEG_INF, POS_INF
from algebra.rat_func import RatFunc
from lib.errors import PreconditionError
from skew.embedding import FieldEmbedding, count_roots_in
from skew.skew_poly import SkewPoly, kernel_dim_closure, skew_eval, skew_mul, tau_valuation

F2 = make_context(2)
F3 = make_context(3)
K3 = FunctionField(F3)

polynomial_coefficients = st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=3).filter(any)
nonzero_twisted = st.tuples(
    st.integers(min_value=0, max_value=1), st.lists(polynomial_coefficients, min_size=1, max_size=2)
)
Shape = tuple[int, list[list[int]]]


def twisted(shape: Shape) -> SkewPoly:
    """A twisted polynomial with nonzero polynomial coefficients, times tau^shift"""
    shift, rows = shape
    coeffs = [K3.zero()] * shift + [K3.from_poly(FqPoly.from_coeffs(F3, row)) for row in rows]
    return SkewPoly(K3, coeffs)


@pytest.fixture
def k3() -> FunctionField:
    return FunctionField(F3)


class TestSkewPoly:
    """tau l = l^q tau"""

    def test_commutation_rule(self, k3: FunctionField) -> None:
        """tau * T = T^3 tau over F_3(T)"""
        t = SkewPoly.constant(k3, RatFunc.T(F3))
        tau = SkewPoly.tau(k3)
        assert skew_mul(tau, t) == SkewPoly(k3, [k3.zero(), RatFunc.T(F3) ** 3])
        assert t * tau == SkewPoly(k3, [k3.zero(), RatFunc.T(F3)])
        assert tau * t != t * tau

    def test_trailing_zeros_are_trimmed(self, k3: FunctionField) -> None:
        """Degree counts the last nonzero coefficient"""
        f = SkewPoly(k3, [k3.one(), k3.zero(), k3.zero()])
        assert f.degree() == 0
        assert SkewPoly(k3, []).degree() == NEG_INF
        assert (f - f).is_zero()

    def test_eval(self, k3: FunctionField) -> None:
        """(tau + T)(x) = x^3 + T x"""
        f = SkewPoly(k3, [RatFunc.T(F3), k3.one()])
        x = RatFunc.T(F3) + 1
        assert skew_eval(f, x) == x**3 + RatFunc.T(F3) * x

    def test_tau_valuation_and_kernel_dimension(self, k3: FunctionField) -> None:
        """ker(T + g tau + Delta tau^2) has dimension 2 over the closure"""
        f = SkewPoly(k3, [k3.zero(), k3.zero(), k3.one()])
        assert tau_valuation(f) == 2
        assert tau_valuation(SkewPoly(k3, [])) == POS_INF
        phi = SkewPoly(k3, [RatFunc.T(F3), k3.one(), k3.one()])
        assert kernel_dim_closure(phi) == 2
        assert kernel_dim_closure(f) == 0
        with pytest.raises(PreconditionError):
            kernel_dim_closure(SkewPoly(k3, []))

    def test_mixed_fields(self, k3: FunctionField) -> None:
        """Coefficient fields must agree"""
        other = SkewPoly.tau(FunctionField(F2))
        with pytest.raises(PreconditionError):
            SkewPoly.tau(k3) + other


class TestSkewRing:
    """Ring laws of K{tau} and evaluation as composition"""

    @settings(derandomize=True, max_examples=50)
    @given(a=nonzero_twisted, b=nonzero_twisted, c=nonzero_twisted)
    def test_associative_and_distributive(self, a: Shape, b: Shape, c: Shape) -> None:
        """(ab)c = a(bc), a(b + c) = ab + ac and (a + b)c = ac + bc"""
        fa, fb, fc = twisted(a), twisted(b), twisted(c)
        assert skew_mul(skew_mul(fa, fb), fc) == skew_mul(fa, skew_mul(fb, fc))
        assert skew_mul(fa, fb + fc) == skew_mul(fa, fb) + skew_mul(fa, fc)
        assert skew_mul(fa + fb, fc) == skew_mul(fa, fc) + skew_mul(fb, fc)

    @settings(derandomize=True, max_examples=50)
    @given(a=nonzero_twisted, b=nonzero_twisted)
    def test_degree_and_tau_valuation_add(self, a: Shape, b: Shape) -> None:
        """K{tau} has no zero divisors"""
        fa, fb = twisted(a), twisted(b)
        product = skew_mul(fa, fb)
        assert product.degree() == fa.degree() + fb.degree()
        assert tau_valuation(product) == tau_valuation(fa) + tau_valuation(fb)

    @settings(derandomize=True, max_examples=50)
    @given(a=nonzero_twisted, b=nonzero_twisted, x=polynomial_coefficients, y=polynomial_coefficients)
    def test_eval_composes_and_is_additive(self, a: Shape, b: Shape, x: list[int], y: list[int]) -> None:
        """(ab)(x) = a(b(x)) and a(x + y) = a(x) + a(y)"""
        fa, fb = twisted(a), twisted(b)
        rx = K3.from_poly(FqPoly.from_coeffs(F3, x))
        ry = K3.from_poly(FqPoly.from_coeffs(F3, y))
        assert skew_eval(skew_mul(fa, fb), rx) == skew_eval(fa, skew_eval(fb, rx))
        assert skew_eval(fa, rx + ry) == skew_eval(fa, rx) + skew_eval(fa, ry)


class TestEmbedding:
    """Root counts by exhaustion"""

    def test_fixed_points_of_frobenius(self) -> None:
        """x^2 = x has the 2 roots F_2 in F_4 and x^4 = x has all of F_4"""
        field = build_extension(F2, 2)
        minus_one = field.neg(field.one())
        assert count_roots_in(SkewPoly(field, [minus_one, field.one()]), field) == 2
        assert count_roots_in(SkewPoly(field, [minus_one, field.zero(), field.one()]), field) == 4

    def test_count_through_embedding(self) -> None:
        """tau^2 - 1 over A/(T^2+T+1) has 4 roots in F_16"""
        source = residue_field(FqPoly.from_coeffs(F2, [1, 1, 1]))
        target = build_extension(F2, 4)
        f = SkewPoly(source, [source.neg(source.one()), source.zero(), source.one()])
        assert count_roots_in(f, target) == 4

    def test_embedding_maps_the_modulus_to_zero(self) -> None:
        """The image of T is a root of the source modulus"""
        prime = FqPoly.from_coeffs(F2, [1, 1, 1])
        source = residue_field(prime)
        embedding = FieldEmbedding(source, build_extension(F2, 4))
        assert embedding.map_poly(prime) == 0
        t = source.generator()
        assert embedding(source.mul(t, t)) == embedding.target.mul(embedding(t), embedding(t))

    def test_bad_image(self) -> None:
        """An explicit image must be a root"""
        source = residue_field(FqPoly.from_coeffs(F2, [1, 1, 1]))
        with pytest.raises(PreconditionError):
            FieldEmbedding(source, build_extension(F2, 4), image=1)
