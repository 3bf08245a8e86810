"""The bracket products D_n(S), L_n(S) and their quotients into D_n, (-1)^n L_n"""

from functools import lru_cache

from algebra.brackets import bracket, bracket_power, products
from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from lib.errors import PreconditionError
from series.index_set import IndexSet


def _check(n: int, s: IndexSet) -> None:
    if n < 1:
        raise PreconditionError(f"weight products need n >= 1, got {n}")
    if not s.is_subset_of(IndexSet.full(n)):
        raise PreconditionError(f"S = {s!r} is not a subset of {{0, ..., {n - 1}}}")


@lru_cache(maxsize=4096)
def weight_products(ctx: FieldContext, n: int, s: IndexSet) -> tuple[FqPoly, FqPoly]:
    """D_n(S) = prod_(i in S) [n-i]^(q^i) and L_n(S) = (-1)^|S| [n] prod_(0 != i in S) [i]"""
    _check(n, s)
    d = FqPoly.one(ctx)
    for i in s:
        d = d * bracket_power(ctx, n - i, i)
    l_part = bracket(ctx, n)
    for i in s:
        if i:
            l_part = l_part * bracket(ctx, i)
    if len(s) % 2:
        l_part = -l_part
    return d, l_part


@lru_cache(maxsize=4096)
def mu_quotient(ctx: FieldContext, n: int, s: IndexSet) -> FqPoly:
    """D_n / D_n(S)"""
    d_n, _ = products(ctx, n)
    return d_n.exact_div(weight_products(ctx, n, s)[0])


@lru_cache(maxsize=4096)
def gamma_quotient(ctx: FieldContext, n: int, s: IndexSet) -> FqPoly:
    """(-1)^n L_n / L_n(S)"""
    _, l_n = products(ctx, n)
    if n % 2:
        l_n = -l_n
    return l_n.exact_div(weight_products(ctx, n, s)[1])
