"""Brackets [n] = T^(q^n) - T and the products D_n, L_n"""

from functools import lru_cache

from algebra.field_context import FieldContext
from algebra.fq_poly import DegreeBoundError, FqPoly
from lib.errors import PreconditionError


@lru_cache(maxsize=None)
def bracket(ctx: FieldContext, n: int) -> FqPoly:
    """[n] = T^(q^n) - T, n >= 1"""
    if n < 1:
        raise PreconditionError(f"bracket [n] needs n >= 1, got {n}")
    exponent = ctx.q**n
    if exponent > ctx.limits.max_degree:
        raise DegreeBoundError(f"[{n}] has degree q^{n} = {exponent} above the bound {ctx.limits.max_degree}")
    return FqPoly(ctx, {exponent: 1, 1: ctx.neg(1)})


@lru_cache(maxsize=None)
def products(ctx: FieldContext, n: int) -> tuple[FqPoly, FqPoly]:
    """(D_n, L_n) with D_n = prod [i]^(q^(n-i)) and L_n = [n]...[1]; D_0 = L_0 = 1"""
    if n < 0:
        raise PreconditionError(f"products D_n, L_n need n >= 0, got {n}")
    if n == 0:
        one = FqPoly.one(ctx)
        return one, one
    d_prev, l_prev = products(ctx, n - 1)
    b = bracket(ctx, n)
    return b * d_prev.frobenius(1), b * l_prev


def bracket_power(ctx: FieldContext, n: int, k: int) -> FqPoly:
    """[n]^(q^k) = T^(q^(n+k)) - T^(q^k)"""
    return bracket(ctx, n).frobenius(k)
