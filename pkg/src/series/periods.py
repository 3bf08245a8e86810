"""Partial sums of the period f(c) = sum a_1(n) c^(q^n) of a Legendre module in F_1*.

Values live in K_oo[c] with c^(q-1) = T/Delta. Coefficients are Laurent series known below a
working precision that is doubled until every requested valuation is determined. A term that
stays unresolved is tested exactly in K; a vanishing term has valuation +oo.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeVar

from algebra.brackets import bracket
from algebra.fields import FunctionField
from algebra.field_context import FieldContext
from algebra.infinity import POS_INF, Infinity, is_infinite
from algebra.laurent import LaurentSeries
from algebra.rat_func import RatFunc
from drinfeld.drinfeld_module import DrinfeldModule, f_star_check, in_f_delta
from lib.errors import PrecisionError, PreconditionError, ResourceBoundError
from series.kummer import KummerElem, KummerRing
from series.log_exp import a_delta_series

INITIAL_PRECISION = 64

Result = TypeVar("Result")


class UnresolvedTermsError(PrecisionError):
    """Some a_1(n) has no known nonzero coefficient below the working precision"""

    def __init__(self, indices: list[int], prec: int) -> None:
        super().__init__(f"a_1(n) for n in {indices} not determined below u^{prec}")
        self.indices = indices


@dataclass(frozen=True)
class PeriodApproximation:
    """sum_(n <= N) a_1(n) c^(q^n) together with the valuation of each term"""

    value: KummerElem
    term_valuations: tuple[Fraction | Infinity, ...]
    precision: int | None


def check_period_module(dm: DrinfeldModule, n_terms: int) -> KummerRing:
    """Preconditions shared by the period operations; returns the ring K[c]"""
    if not (dm.a_map.is_generic() and isinstance(dm.field, FunctionField)):
        raise PreconditionError("periods are computed for modules over K")
    ctx = dm.field.ctx
    if n_terms < 0:
        raise PreconditionError(f"number of period terms needs N >= 0, got {n_terms}")
    if n_terms > ctx.limits.max_period_terms:
        raise ResourceBoundError(f"N = {n_terms} period terms exceed the bound {ctx.limits.max_period_terms}")
    if not (dm.g.is_integral() and dm.delta.is_integral()):
        raise PreconditionError(f"periods need g and Delta in A, got g = {dm.g}, Delta = {dm.delta}")
    one = RatFunc.one(ctx)
    if not in_f_delta(dm, one):
        raise PreconditionError("phi_T(1) != 0, the module is not in the Legendre family F_1")
    if not f_star_check(dm, one):
        raise PreconditionError("the module is not in F_1*: v(j) < -q or v(1) = (v(g) - v(Delta)) / (q^2 - q) fails")
    ring = KummerRing(dm.delta)
    ring.check_valuation_class()
    return ring


def _coefficient_series(dm: DrinfeldModule, n_terms: int, prec: int) -> list[LaurentSeries]:
    """a_1(0..N) = T sum_(j <= n) beta_j, known below u^prec"""
    ctx = dm.field.ctx
    g, delta = dm.g.as_poly(), dm.delta.as_poly()
    cap = prec + 1
    betas = [LaurentSeries.monomial(ctx, 0)]
    for n in range(1, n_terms + 1):
        inner = cap - ctx.q**n
        acc = betas[n - 1].mul_poly(g.frobenius(n - 1), inner)
        if n >= 2:
            acc = acc + betas[n - 2].mul_poly(delta.frobenius(n - 2), inner)
        betas.append((-acc).div_poly(bracket(ctx, n), cap))
    values = []
    partial = LaurentSeries.zero(ctx)
    for beta in betas:
        partial = partial + beta
        values.append(partial.shift(-1))
    return values


def _alpha_series(dm: DrinfeldModule, n_terms: int, cap: int) -> list[LaurentSeries]:
    """alpha_0..alpha_N known below u^cap"""
    ctx = dm.field.ctx
    g, delta = dm.g.as_poly(), dm.delta.as_poly()
    alphas = [LaurentSeries.monomial(ctx, 0)]
    for n in range(1, n_terms + 1):
        acc = alphas[n - 1].frobenius(1, cap).mul_poly(g)
        if n >= 2:
            acc = acc + alphas[n - 2].frobenius(2, cap).mul_poly(delta)
        alphas.append(acc.div_poly(bracket(ctx, n), cap))
    return alphas


def _period_at(
    dm: DrinfeldModule, ring: KummerRing, n_terms: int, prec: int, vanishing: frozenset[int] = frozenset()
) -> PeriodApproximation:
    """Terms listed in vanishing are known to be exactly zero"""
    q = ring.ctx.q
    coefficients = _coefficient_series(dm, n_terms, prec)
    value = KummerElem.zero(ring)
    valuations: list[Fraction | Infinity] = []
    unresolved = []
    for n, a in enumerate(coefficients):
        if n in vanishing:
            valuations.append(POS_INF)
            continue
        try:
            valuations.append(Fraction(a.valuation()) + q**n * ring.c_valuation)
        except PrecisionError:
            unresolved.append(n)
            continue
        value = value + ring.c_power(q**n, a, prec)
    if unresolved:
        raise UnresolvedTermsError(unresolved, prec)
    return PeriodApproximation(value, tuple(valuations), prec)


def _vanishing_terms(dm: DrinfeldModule, indices: list[int]) -> frozenset[int]:
    """The n in indices with a_1(n) = 0 in K"""
    exact = a_delta_series(dm, RatFunc.one(dm.field.ctx), max(indices))
    return frozenset(n for n in indices if exact[n].is_zero())


def _adaptive(ctx: FieldContext, start: int, what: str, compute: Callable[[int], Result]) -> Result:
    prec = max(start, INITIAL_PRECISION)
    limit = ctx.limits.max_precision
    while True:
        try:
            return compute(prec)
        except PrecisionError:
            if prec >= limit:
                raise PrecisionError(f"{what} is not determined within the maximal precision u^{limit}") from None
            prec = min(2 * prec, limit)


def period_partial(dm: DrinfeldModule, n_terms: int, precision: int = INITIAL_PRECISION) -> PeriodApproximation:
    """sum_(n <= N) a_1(n) c^(q^n) in K_oo[c], with exact term valuations v(a_1(n)) + q^n v(c)"""
    ring = check_period_module(dm, n_terms)
    prec = max(precision, INITIAL_PRECISION)
    limit = ring.ctx.limits.max_precision
    vanishing: frozenset[int] | None = None
    while True:
        try:
            return _period_at(dm, ring, n_terms, prec, vanishing or frozenset())
        except PrecisionError as e:
            # the unresolved indices only shrink as the precision grows
            if vanishing is None and isinstance(e, UnresolvedTermsError):
                vanishing = _vanishing_terms(dm, e.indices)
                if vanishing:
                    continue
            if prec >= limit:
                raise PrecisionError(
                    f"the period terms are not determined within the maximal precision u^{limit}"
                ) from None
            prec = min(2 * prec, limit)


def period_partial_exact(dm: DrinfeldModule, n_terms: int) -> PeriodApproximation:
    """The same partial sum with exact coefficients in K; a vanishing term has valuation +oo"""
    ring = check_period_module(dm, n_terms)
    q = ring.ctx.q
    value = KummerElem.zero(ring)
    valuations: list[Fraction | Infinity] = []
    for n, a in enumerate(a_delta_series(dm, RatFunc.one(ring.ctx), n_terms)):
        valuations.append(a.valuation() + q**n * ring.c_valuation)
        value = value + ring.c_power(q**n, a)
    return PeriodApproximation(value, tuple(valuations), None)


def _residual_at(
    dm: DrinfeldModule, ring: KummerRing, n_terms: int, prec: int, vanishing: frozenset[int]
) -> Fraction:
    omega = _period_at(dm, ring, n_terms, prec, vanishing).value
    floor = min((c.lower_bound() for c in omega.coeffs if c is not None), default=0.0)
    negative_part = max(0, -math.floor(floor)) if floor != math.inf else 0
    alphas = _alpha_series(dm, n_terms, prec + ring.ctx.q**n_terms * negative_part)
    total = KummerElem.zero(ring)
    for m, alpha in enumerate(alphas):
        lower = alpha.lower_bound()
        frob_cap = prec - min(0, math.floor(lower)) if lower != math.inf else prec
        total = total + omega.frobenius(m, frob_cap).scale(alpha, prec)
    valuation = total.valuation()
    if not isinstance(valuation, Fraction):
        raise PrecisionError("the exponential vanishes at every known coefficient")
    return valuation


def period_residual(dm: DrinfeldModule, n_terms: int) -> Fraction:
    """v(sum_(m <= N) alpha_m w^(q^m)) for w the N-th partial period sum"""
    ring = check_period_module(dm, n_terms)
    terms = period_partial(dm, n_terms).term_valuations
    vanishing = frozenset(n for n, v in enumerate(terms) if is_infinite(v))
    finite = [v for v in terms if not is_infinite(v)]
    start = int(ring.ctx.q * max(max(finite, default=1), 1)) + INITIAL_PRECISION
    return _adaptive(
        ring.ctx, start, "the exponential residual", lambda prec: _residual_at(dm, ring, n_terms, prec, vanishing)
    )

