"""The Kummer extension K[c]/(c^(q-1) - T/Delta) holding the (q-1)-st root c.

Coefficients are exact rational functions or Laurent series in K_oo; both kinds expose the same
arithmetic, so one element type serves the exact and the approximate period computations.
"""

import math
from fractions import Fraction
from typing import Union

from algebra.infinity import POS_INF, Infinity, is_infinite
from algebra.laurent import LaurentSeries
from algebra.rat_func import RatFunc
from lib.errors import PrecisionError, PreconditionError

Coefficient = Union[RatFunc, LaurentSeries]


class DegenerateValuationError(PreconditionError):
    """The valuation classes i v(c) mod 1 are not pairwise distinct"""


class KummerRing:
    """K[c] with c^(q-1) = r = T / Delta"""

    def __init__(self, delta: RatFunc) -> None:
        if delta.is_zero():
            raise PreconditionError("the Kummer ring needs Delta != 0")
        self.ctx = delta.ctx
        self.delta = delta
        self.degree = self.ctx.q - 1
        self.radicand = RatFunc.T(self.ctx) / delta
        radicand_valuation = self.radicand.valuation()
        assert not is_infinite(radicand_valuation)
        self.c_valuation = Fraction(radicand_valuation, self.degree)

    def check_valuation_class(self) -> None:
        if self.degree > 1 and self.c_valuation.denominator != self.degree:
            raise DegenerateValuationError(
                f"v(c) = {self.c_valuation} has reduced denominator {self.c_valuation.denominator}, not q - 1 ="
                f" {self.degree}; the valuation of K[c] is not the minimum over monomials"
            )

    def radicand_power(self, e: int) -> RatFunc:
        """r^e in K"""
        return self.radicand**e

    def radicand_power_series(self, e: int, cap: int | None) -> LaurentSeries:
        """r^e in K_oo, known below u^cap"""
        if e == 0 or self.radicand.is_laurent_monomial():
            power = self.radicand**e
            exponent = power.den.deg() - power.num.deg()
            return LaurentSeries.monomial(self.ctx, exponent, power.num.leading_coeff()).truncate(cap)
        if cap is None:
            raise PreconditionError("a series power of T / Delta needs a precision cap")
        v = int(self.radicand.valuation())
        base = LaurentSeries.from_ratfunc(self.radicand, cap - (e - 1) * v)
        return base.power(e, cap)

    def element(self, coeffs: list[Coefficient | None]) -> "KummerElem":
        return KummerElem(self, coeffs)

    def c_power(self, k: int, coefficient: Coefficient, cap: int | None = None) -> "KummerElem":
        """coefficient * c^k"""
        index, e = k % self.degree, k // self.degree
        coeffs: list[Coefficient | None] = [None] * self.degree
        if isinstance(coefficient, RatFunc):
            coeffs[index] = coefficient * self.radicand_power(e)
        else:
            if cap is None:
                cap = coefficient.prec
            floor = coefficient.lower_bound()
            factor_cap = cap - int(floor) if cap is not None and floor != math.inf else cap
            coeffs[index] = coefficient.mul(self.radicand_power_series(e, factor_cap), cap)
        return KummerElem(self, coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, KummerRing) and self.delta == other.delta

    def __hash__(self) -> int:
        return hash(self.delta)


class KummerElem:
    """sum k_i c^i, i = 0..q-2; a missing coefficient is an exact zero"""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: KummerRing, coeffs: list[Coefficient | None]) -> None:
        if len(coeffs) != ring.degree:
            raise PreconditionError(f"a Kummer element has {ring.degree} coefficients, got {len(coeffs)}")
        self.ring = ring
        self.coeffs = tuple(None if c is None or _is_exact_zero(c) else c for c in coeffs)

    @classmethod
    def zero(cls, ring: KummerRing) -> "KummerElem":
        return cls(ring, [None] * ring.degree)

    def _check(self, other: "KummerElem") -> None:
        if self.ring != other.ring:
            raise PreconditionError("Kummer elements over different radicands")

    def __add__(self, other: "KummerElem") -> "KummerElem":
        self._check(other)
        coeffs: list[Coefficient | None] = []
        for a, b in zip(self.coeffs, other.coeffs):
            coeffs.append(b if a is None else a if b is None else a + b)
        return KummerElem(self.ring, coeffs)

    def __neg__(self) -> "KummerElem":
        return KummerElem(self.ring, [None if c is None else -c for c in self.coeffs])

    def __sub__(self, other: "KummerElem") -> "KummerElem":
        return self + (-other)

    def scale(self, x: Coefficient, cap: int | None = None) -> "KummerElem":
        """x * self for x in K or K_oo"""
        coeffs: list[Coefficient | None] = []
        for c in self.coeffs:
            if c is None:
                coeffs.append(None)
            elif isinstance(c, LaurentSeries):
                assert isinstance(x, LaurentSeries)
                coeffs.append(c.mul(x, cap))
            else:
                coeffs.append(c * x)
        return KummerElem(self.ring, coeffs)

    def frobenius(self, k: int, cap: int | None = None) -> "KummerElem":
        """self^(q^k) = sum k_i^(q^k) c^(i q^k)"""
        q = self.ring.ctx.q
        result = KummerElem.zero(self.ring)
        for i, c in enumerate(self.coeffs):
            if c is None:
                continue
            if isinstance(c, LaurentSeries):
                powered: Coefficient = c.frobenius(k, cap)
            else:
                powered = c.frobenius(k)
            result = result + self.ring.c_power(i * q**k, powered, cap)
        return result

    def expand(self, prec: int) -> "KummerElem":
        """Series form, coefficients known below u^prec"""
        coeffs: list[Coefficient | None] = []
        for c in self.coeffs:
            if c is None:
                coeffs.append(None)
            elif isinstance(c, RatFunc):
                coeffs.append(LaurentSeries.from_ratfunc(c, prec).truncate(prec))
            else:
                coeffs.append(c.truncate(prec))
        return KummerElem(self.ring, coeffs)

    def agrees_with(self, other: "KummerElem") -> bool:
        """Equal on every series coefficient both sides know"""
        self._check(other)
        for a, b in zip(self.coeffs, other.coeffs):
            if a is None and b is None:
                continue
            if not isinstance(a if a is not None else b, LaurentSeries):
                if a != b:
                    return False
                continue
            ctx = self.ring.ctx
            left = a if a is not None else LaurentSeries.zero(ctx)
            right = b if b is not None else LaurentSeries.zero(ctx)
            assert isinstance(left, LaurentSeries) and isinstance(right, LaurentSeries)
            if not left.agrees_with(right):
                return False
        return True

    def is_zero(self) -> bool:
        return all(c is None for c in self.coeffs)

    def valuation(self) -> Fraction | Infinity:
        """min_i v(k_i) + i v(c); raises PrecisionError when an unresolved coefficient could undercut it"""
        self.ring.check_valuation_class()
        known: list[Fraction] = []
        bounds: list[Fraction] = []
        for i, c in enumerate(self.coeffs):
            if c is None:
                continue
            shift = i * self.ring.c_valuation
            if isinstance(c, LaurentSeries) and c.is_zero():
                assert c.prec is not None
                bounds.append(c.prec + shift)
                continue
            value = c.valuation()
            assert not is_infinite(value)
            known.append(Fraction(value) + shift)
        if not known:
            if bounds:
                raise PrecisionError(f"valuation is above every known coefficient, at least {min(bounds)}")
            return POS_INF
        result = min(known)
        if bounds and min(bounds) <= result:
            raise PrecisionError(f"valuation {result} is not separated from the precision bound {min(bounds)}")
        return result

    def __repr__(self) -> str:
        parts = [f"({c!r})*c^{i}" for i, c in enumerate(self.coeffs) if c is not None]
        return "KummerElem(" + (" + ".join(parts) or "0") + ")"


def _is_exact_zero(c: Coefficient) -> bool:
    if isinstance(c, RatFunc):
        return c.is_zero()
    return c.is_zero() and c.is_exact()

