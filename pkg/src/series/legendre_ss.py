"""Supersingularity of Legendre modules read off p_n(-Delta / T^q) mod p"""

from algebra.ext_field import ExtField, residue_field
from algebra.fq_poly import FqPoly
from algebra.irreducible import is_irreducible
from algebra.rat_func import RatFunc
from lib.errors import BadReductionError, PreconditionError
from series.period_coefficients import Mode, pn


class CriterionInapplicableError(PreconditionError):
    """T is not invertible modulo the prime"""


def reduce_ratfunc(r: RatFunc, field: ExtField) -> int:
    """Image of r in A/p; the denominator must be a unit there"""
    den = field.from_poly(r.den)
    if den == 0:
        raise BadReductionError(f"denominator {r.den} vanishes in {field.tag}")
    return field.div(field.from_poly(r.num), den)


def legendre_ss_by_pn(delta: FqPoly, prime: FqPoly) -> bool:
    """True iff p_n(-Delta T^-q) = 0 in A/p, n = deg p"""
    ctx = prime.ctx
    if prime.is_constant() or not prime.is_monic() or not is_irreducible(prime):
        raise PreconditionError(f"{prime} is not a monic irreducible polynomial")
    if prime == FqPoly.T(ctx):
        raise CriterionInapplicableError("the p_n criterion needs T invertible mod p, so p = T is excluded")
    if (delta % prime).is_zero():
        raise BadReductionError(f"Delta = {delta} vanishes mod {prime}")
    field = residue_field(prime)
    n = prime.deg()
    t = field.generator()
    # T^q is a unit mod p, so every T-power denominator of p_n inverts
    x = field.neg(field.div(field.from_poly(delta), field.pow(t, ctx.q)))
    value = field.zero()
    for exp, coeff in pn(ctx, n, Mode.CLOSED):
        value = field.add(value, field.mul(reduce_ratfunc(coeff, field), field.pow(x, exp)))
    return field.is_zero(value)
