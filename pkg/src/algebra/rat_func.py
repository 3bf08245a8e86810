"""Rational functions K = F_q(T) in reduced form with a monic denominator"""

from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from algebra.infinity import POS_INF, Valuation


class RatFunc:
    """Immutable num/den with gcd(num, den) = 1 and den monic"""

    __slots__ = ("num", "den")

    def __init__(self, num: FqPoly, den: FqPoly | None = None, _reduced: bool = False) -> None:
        if den is None:
            self.num, self.den = num, FqPoly.one(num.ctx)
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                num, den = num, FqPoly.one(num.ctx)
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num.exact_div(g), den.exact_div(g)
                lead = den.leading_coeff()
                if lead != 1:
                    inv = num.ctx.inv(lead)
                    num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @property
    def ctx(self) -> FieldContext:
        return self.num.ctx

    @classmethod
    def zero(cls, ctx: FieldContext) -> "RatFunc":
        return cls(FqPoly.zero(ctx))

    @classmethod
    def one(cls, ctx: FieldContext) -> "RatFunc":
        return cls(FqPoly.one(ctx))

    @classmethod
    def T(cls, ctx: FieldContext) -> "RatFunc":
        return cls(FqPoly.T(ctx))

    @classmethod
    def constant(cls, ctx: FieldContext, c: int) -> "RatFunc":
        return cls(FqPoly.constant(ctx, c))

    @classmethod
    def t_power(cls, ctx: FieldContext, k: int, c: int = 1) -> "RatFunc":
        """c * T^k for any integer k"""
        if k >= 0:
            return cls(FqPoly.monomial(ctx, k, c))
        return cls(FqPoly.constant(ctx, c), FqPoly.monomial(ctx, -k), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_integral(self) -> bool:
        return self.den.is_one()

    def is_laurent_monomial(self) -> bool:
        """c * T^k with k of either sign"""
        return self.num.is_monomial() and self.den.is_monomial()

    def has_t_power_denominator(self) -> bool:
        return self.den.is_monomial()

    def as_poly(self) -> FqPoly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def valuation(self) -> Valuation:
        """Infinity valuation v = deg den - deg num, with v(T) = -1"""
        if self.num.is_zero():
            return POS_INF
        return self.den.deg() - self.num.deg()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (FqPoly, int)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        from lib.parser import format_ratfunc

        return format_ratfunc(self)

    def _coerce(self, other: "RatFunc | FqPoly | int") -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, FqPoly):
            return RatFunc(other)
        return RatFunc.constant(self.ctx, self.ctx.from_int(other))

    def __add__(self, other: "RatFunc | FqPoly | int") -> "RatFunc":
        other = self._coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            if self.den.is_one():
                return RatFunc(self.num + other.num)
            return RatFunc(self.num + other.num, self.den)
        if self.den.is_one():
            return RatFunc(self.num * other.den + other.num, other.den, _reduced=True)
        if other.den.is_one():
            return RatFunc(other.num * self.den + self.num, self.den, _reduced=True)
        g = self.den.gcd(other.den)
        if g.is_one():
            num = self.num * other.den + other.num * self.den
            return RatFunc(num, self.den * other.den, _reduced=True)
        d1, d2 = self.den.exact_div(g), other.den.exact_div(g)
        num = self.num * d2 + other.num * d1
        return RatFunc(num, d1 * d2 * g)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other: "RatFunc | FqPoly | int") -> "RatFunc":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "RatFunc | FqPoly | int") -> "RatFunc":
        return self._coerce(other) - self

    def __mul__(self, other: "RatFunc | FqPoly | int") -> "RatFunc":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFunc.zero(self.ctx)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1 = self.num if g1.is_one() else self.num.exact_div(g1)
        d2 = other.den if g1.is_one() else other.den.exact_div(g1)
        n2 = other.num if g2.is_one() else other.num.exact_div(g2)
        d1 = self.den if g2.is_one() else self.den.exact_div(g2)
        # both denominators stay monic after dividing by monic gcds
        return RatFunc(n1 * n2, d1 * d2, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: "RatFunc | FqPoly | int") -> "RatFunc":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: "RatFunc | FqPoly | int") -> "RatFunc":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        # gcd(a, b) = 1 implies gcd(a^k, b^k) = 1
        return RatFunc(self.num**k, self.den**k, _reduced=True)

    def frobenius(self, k: int = 1) -> "RatFunc":
        """self^(q^k); the q-power map is an injective ring endomorphism, so the form stays reduced"""
        return RatFunc(self.num.frobenius(k), self.den.frobenius(k), _reduced=True)
