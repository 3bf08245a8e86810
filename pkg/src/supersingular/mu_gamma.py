"""The universal supersingular polynomials mu_n and gamma_n"""

from enum import Enum
from functools import lru_cache

from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from lib.errors import InternalError, PreconditionError
from supersingular.j_poly import JPoly
from supersingular.shadowed_partitions import enum_p2
from supersingular.weight_products import gamma_quotient, mu_quotient


class Kind(Enum):
    MU = "mu"
    GAMMA = "gamma"


@lru_cache(maxsize=None)
def mu_gamma(ctx: FieldContext, n: int, kind: Kind) -> JPoly:
    """sum over P_2(n) of D_n/D_n(S) (mu) or (-1)^n L_n/L_n(S) (gamma) times j^((w(S1) - (n mod 2)) / (q + 1))"""
    if n < 1:
        raise PreconditionError(f"{kind.value}_n needs n >= 1, got {n}")
    q = ctx.q
    parity = n % 2
    quotient = mu_quotient if kind is Kind.MU else gamma_quotient
    terms: dict[int, FqPoly] = {}
    for pair in enum_p2(n, ctx.limits.max_partition_length):
        weight = pair.s1.weight(q)
        exponent, remainder = divmod(weight - parity, q + 1)
        if remainder:
            raise InternalError(
                f"w(S1) = {weight} for S1 = {pair.s1!r} is not {parity} mod q + 1 = {q + 1} (n = {n})"
            )
        coeff = quotient(ctx, n, pair.union())
        terms[exponent] = terms[exponent] + coeff if exponent in terms else coeff
    return JPoly.of(ctx, terms)


def expected_degree(q: int, n: int) -> int:
    """deg mu_n: (q^n - 1)/(q^2 - 1) for even n, (q^n - q)/(q^2 - 1) for odd n"""
    top = q**n - (1 if n % 2 == 0 else q)
    return top // (q * q - 1)
