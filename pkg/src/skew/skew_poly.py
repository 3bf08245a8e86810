"""Twisted polynomials L{tau} with tau * l = l^q * tau"""

from collections.abc import Callable, Sequence
from typing import Any

from algebra.fields import Field
from algebra.infinity import NEG_INF, POS_INF, Valuation
from lib.errors import PreconditionError


class SkewPoly:
    """sum c_i tau^i over a coefficient field, dense and without trailing zeros"""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence[Any]) -> None:
        self.field = field
        trimmed = list(coeffs)
        while trimmed and field.is_zero(trimmed[-1]):
            trimmed.pop()
        self.coeffs: tuple[Any, ...] = tuple(trimmed)

    @classmethod
    def constant(cls, field: Field, c: Any) -> "SkewPoly":
        return cls(field, [c])

    @classmethod
    def tau(cls, field: Field, k: int = 1) -> "SkewPoly":
        return cls(field, [field.zero()] * k + [field.one()])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> Valuation:
        """tau-degree, -oo for zero"""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, i: int) -> Any:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"SkewPoly({self})"

    def __str__(self) -> str:
        from lib.parser import format_skew

        return format_skew(self)

    def _check(self, other: "SkewPoly") -> None:
        if self.field != other.field:
            raise PreconditionError(f"mixed coefficient fields {self.field.tag} and {other.field.tag}")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        f = self.field
        length = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(f, [f.add(self.coeff(i), other.coeff(i)) for i in range(length)])

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_mul(self, other)

    def scale(self, c: Any) -> "SkewPoly":
        """c * self (left multiplication by a constant)"""
        return SkewPoly(self.field, [self.field.mul(c, a) for a in self.coeffs])


def skew_mul(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """(sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^(q^i) tau^(i+j)"""
    a._check(b)
    field = a.field
    if a.is_zero() or b.is_zero():
        return SkewPoly(field, [])
    result = [field.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if field.is_zero(ai):
            continue
        for j, bj in enumerate(b.coeffs):
            if field.is_zero(bj):
                continue
            term = field.mul(ai, field.frobenius(bj, i))
            result[i + j] = field.add(result[i + j], term)
    return SkewPoly(field, result)


def skew_eval(f: SkewPoly, x: Any, target: Field | None = None, embed: Callable[[Any], Any] | None = None) -> Any:
    """f(x) = sum c_i x^(q^i), x in the coefficient field or, through embed, in a target field"""
    field = target if target is not None else f.field
    if target is not None and target != f.field and embed is None:
        raise PreconditionError(f"no embedding of {f.field.tag} into {target.tag}")
    result = field.zero()
    power = x
    for i, c in enumerate(f.coeffs):
        if i:
            power = field.frobenius(power, 1)
        if not f.field.is_zero(c):
            image = embed(c) if embed is not None else c
            result = field.add(result, field.mul(image, power))
    return result


def tau_valuation(f: SkewPoly) -> Valuation:
    """Least i with c_i != 0, +oo for zero"""
    for i, c in enumerate(f.coeffs):
        if not f.field.is_zero(c):
            return i
    return POS_INF


def kernel_dim_closure(f: SkewPoly) -> int:
    """F_q-dimension of ker f over an algebraic closure: deg_tau f - tau_valuation f"""
    if f.is_zero():
        raise PreconditionError("kernel of the zero twisted polynomial is the whole closure")
    valuation = tau_valuation(f)
    assert isinstance(valuation, int)
    return len(f.coeffs) - 1 - valuation
