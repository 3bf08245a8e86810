"""Unit tests for the exhaustive supersingular search"""

import pytest

from algebra.field_context import make_context
from algebra.fq_poly import FqPoly
from drinfeld.a_field_map import residue_map
from drinfeld.drinfeld_module import j_invariant
from lib.errors import PreconditionError
from supersingular.j_poly import JPoly
from supersingular.ss_oracle import module_with_j, ss_oracle


@pytest.fixture
def f2():
    return make_context(2)


class TestSsOracle:
    """U_p and ss_p over the quadratic extension of A/p"""

    def test_degree_two(self, f2) -> None:
        """p = T^2+T+1: U_p = {1} and ss_p = j + 1"""
        prime = FqPoly.from_coeffs(f2, [1, 1, 1])
        result = ss_oracle(prime)
        assert result.degree == 2
        assert result.field.size == 16
        assert result.supersingular == (1,)
        assert not result.contains_zero()
        assert result.ss == JPoly.of(f2, {1: FqPoly.one(f2), 0: FqPoly.one(f2)})

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_degree_one(self, p: int) -> None:
        """Only j = 0 is supersingular at a prime of degree 1, so ss_p = 1"""
        ctx = make_context(p)
        for c in range(ctx.q):
            result = ss_oracle(FqPoly.from_coeffs(ctx, [c, 1]))
            assert result.supersingular == (0,)
            assert result.ss == JPoly.one(ctx)

    @pytest.mark.parametrize("coeffs", [[1, 0, 1], [1], [0, 0, 1]])
    def test_not_a_prime(self, f2, coeffs: list[int]) -> None:
        """Monic irreducible non-constant polynomials only"""
        with pytest.raises(PreconditionError):
            ss_oracle(FqPoly.from_coeffs(f2, coeffs))


class TestModuleWithJ:
    """A representative module for each j"""

    @pytest.mark.parametrize("j", range(4))
    def test_j_invariant(self, f2, j: int) -> None:
        """j(module_with_j(j)) = j"""
        a_map = residue_map(FqPoly.from_coeffs(f2, [1, 1, 1]))
        assert j_invariant(module_with_j(a_map, j)) == j
