"""The Legendre period coefficients b_n(D), a_n and the polynomials p_n(x)"""

from enum import Enum
from functools import lru_cache

from algebra.brackets import products
from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from algebra.rat_func import RatFunc
from lib.errors import InternalError, PreconditionError
from series.index_set import shadow_stats, subsets
from series.series_poly import SeriesPoly


class Mode(Enum):
    """How a coefficient family is computed"""

    RECURSIVE = "rec"
    CLOSED = "closed"

    @staticmethod
    def from_string(value: str) -> "Mode":
        value = value.strip().lower()
        if value in ("rec", "recursive"):
            return Mode.RECURSIVE
        if value == "closed":
            return Mode.CLOSED
        raise PreconditionError(f"unknown mode {value!r}, expected rec or closed")


def _t_power(ctx: FieldContext, k: int, c: int = 1) -> RatFunc:
    return RatFunc.t_power(ctx, k, c)


def _subset_sum(ctx: FieldContext, n: int, var: str, signed: bool) -> SeriesPoly:
    """sum over S in N(n) of (+-1) X^w(S) / m(S)"""
    terms: dict[int, RatFunc] = {}
    for s in subsets(n):
        _, weight, m = shadow_stats(s, ctx)
        c = ctx.neg(1) if signed and (n - len(s)) % 2 else 1
        terms[weight] = _t_power(ctx, -m.deg(), c)
    return SeriesPoly(ctx, var, terms)


@lru_cache(maxsize=None)
def bn(ctx: FieldContext, n: int, mode: Mode = Mode.CLOSED) -> SeriesPoly:
    """b_n as a polynomial in D"""
    if n < 0:
        raise PreconditionError(f"b_n needs n >= 0, got {n}")
    if mode is Mode.CLOSED:
        return _subset_sum(ctx, n, "D", signed=False)
    one = SeriesPoly.one(ctx, "D")
    if n == 0:
        return one
    previous, current = SeriesPoly(ctx, "D"), one
    for k in range(1, n + 1):
        step = ctx.q ** (k - 1)
        d_power = SeriesPoly.monomial(ctx, "D", step)
        correction = d_power.scale(_t_power(ctx, 1 - step) - RatFunc.one(ctx))
        previous, current = current, (one + d_power) * current + correction * previous
    return current


@lru_cache(maxsize=None)
def pn(ctx: FieldContext, n: int, mode: Mode = Mode.CLOSED) -> SeriesPoly:
    """p_n(x); p_-1 = 0 and p_0 = 1"""
    if n < -1:
        raise PreconditionError(f"p_n needs n >= -1, got {n}")
    if n == -1:
        return SeriesPoly(ctx, "x")
    if mode is Mode.CLOSED:
        result = _subset_sum(ctx, n, "x", signed=True)
    else:
        one = SeriesPoly.one(ctx, "x")
        previous, current = SeriesPoly(ctx, "x"), one
        for k in range(n):
            step = ctx.q**k
            x_power = SeriesPoly.monomial(ctx, "x", step)
            tail = x_power.scale(RatFunc.one(ctx) - _t_power(ctx, 1 - step))
            previous, current = current, (x_power - one) * current + tail * previous
        result = current
    for _, coeff in result:
        if not coeff.has_t_power_denominator():
            raise InternalError(f"p_{n} has a coefficient {coeff} whose denominator is not a power of T")
    return result


def an(ctx: FieldContext, n: int) -> tuple[RatFunc, SeriesPoly]:
    """a_n = scalar * b_n(D) with scalar = T^(1 + q + ... + q^n) / L_n"""
    if n < 0:
        raise PreconditionError(f"a_n needs n >= 0, got {n}")
    exponent = (ctx.q ** (n + 1) - 1) // (ctx.q - 1)
    _, l_n = products(ctx, n)
    scalar = RatFunc(FqPoly.monomial(ctx, exponent), l_n)
    return scalar, bn(ctx, n, Mode.CLOSED)


def specialize(poly: SeriesPoly, value: RatFunc) -> RatFunc:
    """Substitute an element of K for the indeterminate"""
    return poly.evaluate(value, RatFunc.one(poly.ctx))


def an_at(ctx: FieldContext, n: int, delta: RatFunc) -> RatFunc:
    """a_n with D specialized to Delta / T^q"""
    scalar, b = an(ctx, n)
    return scalar * specialize(b, delta * _t_power(ctx, -ctx.q))
