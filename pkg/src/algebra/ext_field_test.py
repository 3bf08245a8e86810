"""Unit tests for ExtField"""

import random

import pytest

from algebra.ext_field import ExtField, build_extension, embed_prime_root, residue_field, subfield_express
from algebra.field_context import Limits, make_context
from algebra.fq_poly import FqPoly
from lib.errors import PreconditionError, ResourceBoundError

F2 = make_context(2)
F3 = make_context(3)


class TestExtField:
    """Table arithmetic of F_q[T]/(m)"""

    def test_residue_field_of_degree_two(self) -> None:
        """F_2[T]/(T^2+T+1): T^2 = T+1"""
        field = residue_field(FqPoly.from_coeffs(F2, [1, 1, 1]))
        t = field.generator()
        assert field.size == 4
        assert t == 2
        assert field.mul(t, t) == 3
        assert field.frobenius(t) == 3
        assert field.frobenius(t, 2) == t
        assert field.inv(t) == 3
        assert field.add(t, 3) == 1
        assert field.format(3) == "T+1"

    @pytest.mark.parametrize("p,d", [(2, 3), (3, 2), (2, 4)])
    def test_field_axioms(self, p: int, d: int) -> None:
        """Every nonzero element is invertible, addition and multiplication agree with polynomials mod m"""
        ctx = make_context(p)
        field = build_extension(ctx, d)
        for a in field.elements():
            if a:
                assert field.mul(a, field.inv(a)) == 1
            assert field.add(a, field.neg(a)) == 0
        rng = random.Random(7)
        for _ in range(50):
            a, b = rng.randrange(field.size), rng.randrange(field.size)
            product = (field.to_poly(a) * field.to_poly(b)) % field.modulus
            assert field.mul(a, b) == field.from_poly(product)
            assert field.add(a, b) == field.from_poly(field.to_poly(a) + field.to_poly(b))

    def test_pow_and_zero(self) -> None:
        """0^0 = 1 and negative powers of 0 raise"""
        field = build_extension(F3, 2)
        assert field.pow(0, 0) == 1
        assert field.pow(0, 3) == 0
        with pytest.raises(ZeroDivisionError):
            field.pow(0, -1)
        with pytest.raises(ZeroDivisionError):
            field.inv(0)

    def test_eval_poly(self) -> None:
        """The class of T is a root of the modulus"""
        prime = FqPoly.from_coeffs(F3, [2, 1, 1])
        field = residue_field(prime)
        assert field.eval_poly(prime, field.generator()) == 0

    def test_size_bound(self) -> None:
        """Extensions above max_field_size are refused"""
        ctx = make_context(2, 1, Limits(max_field_size=16))
        with pytest.raises(ResourceBoundError):
            build_extension(ctx, 5)

    def test_bad_modulus(self) -> None:
        """Moduli are monic of degree >= 1"""
        with pytest.raises(PreconditionError):
            ExtField(F3, FqPoly.constant(F3, 1))

    def test_embedding_and_subfield_coordinates(self) -> None:
        """A root t0 of p in F_(q^4) and the expression of t0^2 in the basis 1, t0"""
        prime = FqPoly.from_coeffs(F2, [1, 1, 1])
        field = build_extension(F2, 4)
        t0 = embed_prime_root(prime, field)
        assert field.eval_poly(prime, t0) == 0
        assert subfield_express(field.mul(t0, t0), t0, prime, field) == FqPoly.from_coeffs(F2, [1, 1])
        assert subfield_express(0, t0, prime, field) == 0

    def test_embedding_needs_divisibility(self) -> None:
        """deg p must divide the extension degree"""
        with pytest.raises(PreconditionError):
            embed_prime_root(FqPoly.from_coeffs(F2, [1, 1, 1]), build_extension(F2, 3))
