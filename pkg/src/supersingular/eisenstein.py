"""Closed forms for the exponential and logarithm coefficients as sums over P_2(n)"""

from typing import TypeVar

from algebra.brackets import products
from algebra.fields import FunctionField
from algebra.fq_poly import FqPoly
from algebra.rat_func import RatFunc
from drinfeld.drinfeld_module import DrinfeldModule
from lib.errors import PreconditionError
from supersingular.shadowed_partitions import enum_p2
from supersingular.weight_products import gamma_quotient, mu_quotient

Element = TypeVar("Element", FqPoly, RatFunc)


def _closed_sums(g: Element, delta: Element, n: int) -> tuple[Element, Element]:
    """(sum g^w(S1) Delta^w(S2) D_n/D_n(S), sum g^w(S1) Delta^w(S2) L_n/L_n(S)), S = S1 u S2"""
    ctx = g.ctx
    q = ctx.q
    sum_a = g * 0
    sum_b = g * 0
    sign = ctx.neg(1) if n % 2 else 1
    for pair in enum_p2(n, ctx.limits.max_partition_length):
        monomial = (g ** pair.s1.weight(q)) * (delta ** pair.s2.weight(q))
        s = pair.union()
        sum_a = sum_a + monomial * mu_quotient(ctx, n, s)
        sum_b = sum_b + monomial * gamma_quotient(ctx, n, s).scale(sign)
    return sum_a, sum_b


def _module_over_k(dm: DrinfeldModule) -> None:
    if not (dm.a_map.is_generic() and isinstance(dm.field, FunctionField)):
        raise PreconditionError("closed forms are evaluated for modules over K")


def eisenstein_numerators(dm: DrinfeldModule, n: int) -> tuple[FqPoly, FqPoly]:
    """(A_n, B_n) = (D_n alpha_n, L_n beta_n) from the closed forms, for g and Delta in A"""
    _module_over_k(dm)
    if n < 0:
        raise PreconditionError(f"closed forms need n >= 0, got {n}")
    if not (dm.g.is_integral() and dm.delta.is_integral()):
        raise PreconditionError("integral numerators need g and Delta in A")
    if n == 0:
        one = FqPoly.one(dm.field.ctx)
        return one, one
    return _closed_sums(dm.g.as_poly(), dm.delta.as_poly(), n)


def eisenstein_closed(dm: DrinfeldModule, n: int) -> tuple[RatFunc, RatFunc]:
    """(alpha_n, beta_n) = (sum g^w(S1) Delta^w(S2) / D_n(S), sum g^w(S1) Delta^w(S2) / L_n(S))"""
    _module_over_k(dm)
    if n < 0:
        raise PreconditionError(f"closed forms need n >= 0, got {n}")
    ctx = dm.field.ctx
    if n == 0:
        one = RatFunc.one(ctx)
        return one, one
    d_n, l_n = products(ctx, n)
    if dm.g.is_integral() and dm.delta.is_integral():
        sum_a, sum_b = _closed_sums(dm.g.as_poly(), dm.delta.as_poly(), n)
        return RatFunc(sum_a, d_n), RatFunc(sum_b, l_n)
    sum_a, sum_b = _closed_sums(dm.g, dm.delta, n)
    return sum_a / d_n, sum_b / l_n
