"""Unit tests for the logarithm and exponential coefficients"""

import pytest

from algebra.brackets import products
from algebra.field_context import make_context
from algebra.fq_poly import FqPoly
from algebra.rat_func import RatFunc
from drinfeld.a_field_map import generic_map
from drinfeld.drinfeld_module import DrinfeldModule, legendre
from lib.errors import PreconditionError
from series.log_exp import (
    a_delta_series,
    an_recursive,
    composition_residuals,
    functional_equation_residuals,
    log_exp_coeffs,
    log_exp_numerators,
)
from series.period_coefficients import an_at


def module(ctx, g: list[int], delta: list[int]) -> DrinfeldModule:
    return DrinfeldModule(
        generic_map(ctx), RatFunc(FqPoly.from_coeffs(ctx, g)), RatFunc(FqPoly.from_coeffs(ctx, delta))
    )


class TestLogExp:
    """log(exp(z)) = z and the two functional equations"""

    @pytest.mark.parametrize(
        "p,g,delta",
        [(2, [1, 1], [0, 0, 1]), (3, [2, 0, 1], [1, 1]), (3, [0], [2]), (5, [1, 2, 3], [0, 1])],
    )
    def test_identities(self, p: int, g: list[int], delta: list[int]) -> None:
        """Every residual vanishes up to z^(q^3)"""
        dm = module(make_context(p), g, delta)
        betas, alphas = log_exp_coeffs(dm, 3)
        assert betas[0].is_one() and alphas[0].is_one()
        assert all(r.is_zero() for r in composition_residuals(betas, alphas))
        log_side, exp_side = functional_equation_residuals(dm, betas, alphas)
        assert all(r.is_zero() for r in log_side + exp_side)

    def test_first_coefficients(self) -> None:
        """beta_1 = -g / [1] and alpha_1 = g / [1]"""
        ctx = make_context(3)
        dm = module(ctx, [1, 1], [1])
        betas, alphas = log_exp_coeffs(dm, 1)
        bracket_1 = RatFunc(products(ctx, 1)[1])
        assert betas[1] == -dm.g / bracket_1
        assert alphas[1] == dm.g / bracket_1

    @pytest.mark.parametrize("p", [2, 3])
    def test_numerators(self, p: int) -> None:
        """B_n = L_n beta_n and A_n = D_n alpha_n are polynomials"""
        ctx = make_context(p)
        dm = module(ctx, [1, 0, 1], [0, 1])
        betas, alphas = log_exp_coeffs(dm, 4)
        big_b, big_a = log_exp_numerators(dm, 4)
        for n in range(5):
            d_n, l_n = products(ctx, n)
            assert RatFunc(big_b[n]) == betas[n] * l_n
            assert RatFunc(big_a[n]) == alphas[n] * d_n

    def test_numerators_need_integral_coefficients(self) -> None:
        """g and Delta in A"""
        ctx = make_context(2)
        dm = DrinfeldModule(generic_map(ctx), RatFunc.T(ctx).inverse(), RatFunc.one(ctx))
        with pytest.raises(PreconditionError):
            log_exp_numerators(dm, 2)
        with pytest.raises(PreconditionError):
            log_exp_coeffs(dm, -1)


class TestAnRecursion:
    """a_n by its three-term recursion"""

    @pytest.mark.parametrize("p,delta", [(2, [1, 0, 1]), (3, [1, 0, 1]), (3, [0, 2]), (2, [1])])
    def test_matches_closed_form_and_log_sums(self, p: int, delta: list[int]) -> None:
        """Recursion, closed form at D = Delta / T^q and T sum beta_j agree"""
        ctx = make_context(p)
        d = RatFunc(FqPoly.from_coeffs(ctx, delta))
        recursive = an_recursive(ctx, d, 3)
        from_log = a_delta_series(legendre(d), RatFunc.one(ctx), 3)
        for n in range(4):
            assert recursive[n] == an_at(ctx, n, d)
            assert recursive[n] == from_log[n]

    def test_a_delta_needs_a_root(self) -> None:
        """delta must be a root of phi_T"""
        ctx = make_context(3)
        with pytest.raises(PreconditionError):
            a_delta_series(legendre(RatFunc.T(ctx)), RatFunc.T(ctx), 2)
