"""Rank-2 Drinfeld modules phi_T = i(T) + g tau + Delta tau^2"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from algebra.ext_field import ExtField
from algebra.fields import FunctionField
from algebra.fq_poly import FqPoly
from algebra.infinity import is_infinite
from algebra.rat_func import RatFunc
from drinfeld.a_field_map import AFieldMap, generic_map, residue_map
from lib.errors import BadReductionError, HeightAnomalyError, PreconditionError
from skew.skew_poly import SkewPoly, skew_eval, skew_mul, tau_valuation


class DegenerateModuleError(PreconditionError):
    """Delta = 0, the module would not have rank 2"""


@dataclass(frozen=True)
class DrinfeldModule:
    """(i, g, Delta) with Delta != 0"""

    a_map: AFieldMap
    g: Any
    delta: Any

    def __post_init__(self) -> None:
        if self.a_map.field.is_zero(self.delta):
            raise DegenerateModuleError("Delta must be nonzero for a rank 2 module")

    @property
    def field(self) -> Any:
        return self.a_map.field

    def phi_t(self) -> SkewPoly:
        return SkewPoly(self.field, [self.a_map.image, self.g, self.delta])

    def __str__(self) -> str:
        from lib.parser import format_skew

        return f"phi_T = {format_skew(self.phi_t())}"


def phi_of(dm: DrinfeldModule, a: FqPoly) -> SkewPoly:
    """phi_a = sum a_i phi_T^i, by Horner in the twisted ring"""
    field = dm.field
    if a.is_zero():
        return SkewPoly(field, [])
    phi_t = dm.phi_t()
    result = SkewPoly.constant(field, field.from_fq(a.leading_coeff()))
    for deg in range(a.deg() - 1, -1, -1):
        result = skew_mul(result, phi_t) + SkewPoly.constant(field, field.from_fq(a.coeff(deg)))
    return result


def j_invariant(dm: DrinfeldModule) -> Any:
    """g^(q+1) / Delta"""
    field = dm.field
    return field.div(field.pow(dm.g, field.q + 1), dm.delta)


def reduce_at(dm: DrinfeldModule, prime: FqPoly) -> DrinfeldModule:
    """Reduction of a module over K with integral g, Delta at a monic irreducible prime"""
    if not dm.a_map.is_generic():
        raise PreconditionError("reduction needs a module over K")
    g, delta = dm.g, dm.delta
    if not (g.is_integral() and delta.is_integral()):
        raise PreconditionError(f"reduction needs integral coefficients, got g = {g}, Delta = {delta}")
    target = residue_map(prime)
    field = target.field
    delta_bar = field.from_poly(delta.as_poly())
    if delta_bar == 0:
        raise BadReductionError(f"Delta = {delta} vanishes mod {prime}; the reduction drops rank")
    return DrinfeldModule(target, field.from_poly(g.as_poly()), delta_bar)


def is_supersingular(dm: DrinfeldModule, prime: FqPoly) -> bool:
    """True iff phi_p is purely inseparable, i.e. has tau-valuation 2 deg p"""
    if dm.a_map.is_generic():
        raise PreconditionError("supersingularity is defined over a finite A-field")
    if dm.a_map(prime) != dm.field.zero():
        raise PreconditionError(f"i({prime}) != 0 in {dm.field.tag}")
    n = prime.deg()
    valuation = tau_valuation(phi_of(dm, prime))
    if valuation == 2 * n:
        return True
    if valuation == n:
        return False
    raise HeightAnomalyError(f"tau-valuation {valuation} of phi_p is neither {n} nor {2 * n} for p = {prime}")


def legendre(delta: Any, a_map: AFieldMap | None = None) -> DrinfeldModule:
    """phi_T = T - (T + Delta) tau + Delta tau^2, so that phi_T(1) = 0"""
    if isinstance(delta, FqPoly) and a_map is None:
        delta = RatFunc(delta)
    if a_map is None:
        if not isinstance(delta, RatFunc):
            raise PreconditionError("a Legendre module over a finite field needs its structure map")
        a_map = generic_map(delta.ctx)
    field = a_map.field
    if isinstance(delta, FqPoly):
        delta = field.from_poly(delta)
    g = field.neg(field.add(a_map.image, delta))
    return DrinfeldModule(a_map, g, delta)


def bassa_beelen(delta: Any, a_map: AFieldMap | None = None) -> DrinfeldModule:
    """psi_T = T + (Delta + T) tau + Delta tau^2, with the same j-invariant as legendre(Delta)"""
    if isinstance(delta, FqPoly) and a_map is None:
        delta = RatFunc(delta)
    if a_map is None:
        a_map = generic_map(delta.ctx)
    field = a_map.field
    if isinstance(delta, FqPoly):
        delta = field.from_poly(delta)
    return DrinfeldModule(a_map, field.add(delta, a_map.image), delta)


def legendre_deltas_for_j(a_map: AFieldMap, j: int) -> list[int]:
    """All Delta != 0 in a finite A-field with (i(T) + Delta)^(q+1) / Delta = j"""
    field = a_map.field
    if not isinstance(field, ExtField):
        raise PreconditionError("Delta enumeration needs a finite A-field")
    q = field.q
    result = []
    for delta in field.elements():
        if delta == 0:
            continue
        if field.div(field.pow(field.add(a_map.image, delta), q + 1), delta) == j:
            result.append(delta)
    return result


def in_f_delta(dm: DrinfeldModule, delta: Any) -> bool:
    """phi_T(delta) = 0"""
    return dm.field.is_zero(skew_eval(dm.phi_t(), delta))


def f_star_check(dm: DrinfeldModule, delta: RatFunc) -> bool:
    """v(j) < -q and v(delta) = (v(g) - v(Delta)) / (q^2 - q)"""
    if not isinstance(dm.field, FunctionField):
        raise PreconditionError("the valuation conditions are defined over K")
    q = dm.field.q
    j = j_invariant(dm)
    v_j = j.valuation()
    if is_infinite(v_j) or not v_j < -q:
        return False
    v_g = dm.g.valuation()
    if is_infinite(v_g):
        return False
    v_delta = delta.valuation()
    if is_infinite(v_delta):
        return False
    return Fraction(v_delta) == Fraction(v_g - dm.delta.valuation(), q * q - q)
