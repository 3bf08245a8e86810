"""Irreducibility by trial division and ordered enumeration of monic irreducibles"""

from collections.abc import Iterator
from functools import lru_cache

from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from lib.errors import PreconditionError, ResourceBoundError


def monic_polys(ctx: FieldContext, d: int) -> Iterator[FqPoly]:
    """All monic polynomials of degree d, in lexicographic order of the coefficients read from the top down"""
    base = ctx.q**d
    for low in range(base):
        yield FqPoly.from_int(ctx, base + low)


def is_irreducible(f: FqPoly) -> bool:
    """True iff f has no monic factor of degree in [1, deg f / 2]"""
    if f.is_zero() or f.is_constant():
        raise PreconditionError("irreducibility is only defined for polynomials of degree >= 1")
    n = f.deg()
    if n == 1:
        return True
    if f.constant_term() == 0:
        return False
    for d in range(1, n // 2 + 1):
        for candidate in _divisor_candidates(f.ctx, d):
            if (f % candidate).is_zero():
                return False
    return True


@lru_cache(maxsize=None)
def _divisor_candidates(ctx: FieldContext, d: int) -> tuple[FqPoly, ...]:
    # a smallest monic factor is irreducible, so only irreducible candidates need testing
    if d == 1:
        return tuple(monic_polys(ctx, 1))
    return monic_irreducibles(ctx, d)


@lru_cache(maxsize=None)
def monic_irreducibles(ctx: FieldContext, d: int) -> tuple[FqPoly, ...]:
    """Monic irreducibles of degree d in lexicographic order (top coefficient first, constant term last)"""
    if d < 1:
        raise PreconditionError(f"degree must be >= 1, got {d}")
    if ctx.q**d > ctx.limits.max_field_size:
        raise ResourceBoundError(
            f"enumerating the {ctx.q}^{d} monic polynomials of degree {d} exceeds the bound"
            f" {ctx.limits.max_field_size}"
        )
    return tuple(f for f in monic_polys(ctx, d) if is_irreducible(f))


def first_monic_irreducible(ctx: FieldContext, d: int) -> FqPoly:
    """Lexicographically smallest monic irreducible of degree d, found without enumerating the rest"""
    if d < 1:
        raise PreconditionError(f"degree must be >= 1, got {d}")
    for f in monic_polys(ctx, d):
        if is_irreducible(f):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {d}")
