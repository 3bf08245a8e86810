"""Polynomials in the j-invariant with coefficients in A"""

from collections.abc import Mapping
from typing import Any

from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from lib.errors import InternalError
from series.series_poly import SeriesPoly


class JPoly(SeriesPoly):
    """sum c_e j^e with every c_e in F_q[T]"""

    __slots__ = ()

    def __init__(self, ctx: FieldContext, var: str = "j", terms: Mapping[int, Any] | None = None) -> None:
        for exp, coeff in (terms or {}).items():
            if not isinstance(coeff, FqPoly):
                raise InternalError(f"coefficient of j^{exp} is {coeff}, not an element of A")
        super().__init__(ctx, var, terms)

    @classmethod
    def of(cls, ctx: FieldContext, terms: Mapping[int, FqPoly]) -> "JPoly":
        return cls(ctx, "j", terms)

    @classmethod
    def one(cls, ctx: FieldContext, var: str = "j") -> "JPoly":
        return cls(ctx, var, {0: FqPoly.one(ctx)})

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading_coeff().is_one()

    def reduce_mod(self, prime: FqPoly) -> "JPoly":
        """Coefficients reduced to degree < deg p"""
        return JPoly(self.ctx, self.var, {exp: coeff % prime for exp, coeff in self.terms.items()})
