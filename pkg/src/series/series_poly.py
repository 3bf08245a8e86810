"""Sparse polynomials in one named indeterminate with coefficients in K (or A)"""

from collections.abc import Iterator, Mapping
from typing import Any

from algebra.field_context import FieldContext
from algebra.rat_func import RatFunc


class SeriesPoly:
    """sum c_e X^e, X one of D, x, j; zero coefficients are never stored"""

    __slots__ = ("ctx", "var", "_terms")

    def __init__(self, ctx: FieldContext, var: str, terms: Mapping[int, Any] | None = None) -> None:
        self.ctx = ctx
        self.var = var
        self._terms: dict[int, Any] = {}
        for exp, coeff in (terms or {}).items():
            if exp < 0:
                raise ValueError(f"negative exponent {exp} in a polynomial in {var}")
            if not coeff.is_zero():
                self._terms[exp] = coeff

    def _new(self, terms: Mapping[int, Any], var: str | None = None) -> "SeriesPoly":
        return type(self)(self.ctx, var or self.var, terms)

    @classmethod
    def one(cls, ctx: FieldContext, var: str) -> "SeriesPoly":
        return cls(ctx, var, {0: RatFunc.one(ctx)})

    @classmethod
    def monomial(cls, ctx: FieldContext, var: str, exp: int, coeff: Any = None) -> "SeriesPoly":
        return cls(ctx, var, {exp: RatFunc.one(ctx) if coeff is None else coeff})

    @property
    def terms(self) -> Mapping[int, Any]:
        return self._terms

    def items_desc(self) -> list[tuple[int, Any]]:
        return sorted(self._terms.items(), key=lambda item: -item[0])

    def __iter__(self) -> Iterator[tuple[int, Any]]:
        return iter(self.items_desc())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self._terms)

    def coeff(self, exp: int) -> Any:
        return self._terms.get(exp)

    def leading_coeff(self) -> Any:
        return self._terms[self.degree()]

    def constant_term(self) -> Any:
        return self._terms.get(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.var == other.var and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def __str__(self) -> str:
        from lib.parser import format_series

        return format_series(self)

    def __add__(self, other: "SeriesPoly") -> "SeriesPoly":
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            terms[exp] = terms[exp] + coeff if exp in terms else coeff
        return self._new(terms)

    def __neg__(self) -> "SeriesPoly":
        return self._new({exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: "SeriesPoly") -> "SeriesPoly":
        return self + (-other)

    def __mul__(self, other: "SeriesPoly") -> "SeriesPoly":
        terms: dict[int, Any] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                product = c1 * c2
                terms[e] = terms[e] + product if e in terms else product
        return self._new(terms)

    def scale(self, c: Any) -> "SeriesPoly":
        return self._new({exp: c * coeff for exp, coeff in self._terms.items()})

    def shift(self, k: int) -> "SeriesPoly":
        """self * X^k"""
        return self._new({exp + k: coeff for exp, coeff in self._terms.items()})

    def negate_variable(self) -> "SeriesPoly":
        """self(-X)"""
        return self._new({exp: (-c if exp % 2 else c) for exp, c in self._terms.items()})

    def rename(self, var: str) -> "SeriesPoly":
        return self._new(self._terms, var)

    def evaluate(self, x: Any, one: Any) -> Any:
        """self(x) for x in the coefficient ring, one being its unit"""
        result = None
        previous = None
        for exp, coeff in self.items_desc():
            if result is None:
                result = coeff
            else:
                result = result * x ** (previous - exp) + coeff
            previous = exp
        if result is None:
            return one - one
        if previous:
            result = result * x**previous
        return result
