"""Coefficient fields for twisted polynomials: the function field K and finite A-fields"""

import random
from abc import ABC, abstractmethod
from typing import Any

from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from algebra.rat_func import RatFunc


class Field(ABC):
    """Field containing F_q, with the q-power Frobenius.

    Elements are plain values (RatFunc for K, ints for finite fields); the field object carries
    the arithmetic. The tag identifies the field in error messages and equality checks.
    """

    ctx: FieldContext

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    @abstractmethod
    def tag(self) -> str:
        pass

    @abstractmethod
    def zero(self) -> Any:
        pass

    @abstractmethod
    def one(self) -> Any:
        pass

    @abstractmethod
    def from_fq(self, c: int) -> Any:
        """Image of an F_q element"""

    @abstractmethod
    def from_poly(self, f: FqPoly) -> Any:
        """Image of f(T) under the structure map from A"""

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def neg(self, a: Any) -> Any:
        pass

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def inv(self, a: Any) -> Any:
        pass

    @abstractmethod
    def is_zero(self, a: Any) -> bool:
        pass

    @abstractmethod
    def frobenius(self, a: Any, k: int = 1) -> Any:
        """a^(q^k)"""

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def pow(self, a: Any, k: int) -> Any:
        if k < 0:
            a, k = self.inv(a), -k
        result = self.one()
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def format(self, a: Any) -> str:
        return str(a)

    def __repr__(self) -> str:
        return self.tag


class FunctionField(Field):
    """K = F_q(T) with elements RatFunc"""

    def __init__(self, ctx: FieldContext, random_degree: int = 3) -> None:
        self.ctx = ctx
        self.random_degree = random_degree

    @property
    def tag(self) -> str:
        return f"F_{self.ctx.q}(T)"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FunctionField) and other.ctx is self.ctx

    def __hash__(self) -> int:
        return hash(("K", id(self.ctx)))

    def zero(self) -> RatFunc:
        return RatFunc.zero(self.ctx)

    def one(self) -> RatFunc:
        return RatFunc.one(self.ctx)

    def from_fq(self, c: int) -> RatFunc:
        return RatFunc.constant(self.ctx, c)

    def from_poly(self, f: FqPoly) -> RatFunc:
        return RatFunc(f)

    def add(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return a + b

    def neg(self, a: RatFunc) -> RatFunc:
        return -a

    def mul(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return a * b

    def inv(self, a: RatFunc) -> RatFunc:
        return a.inverse()

    def is_zero(self, a: RatFunc) -> bool:
        return a.is_zero()

    def frobenius(self, a: RatFunc, k: int = 1) -> RatFunc:
        return a.frobenius(k)

    def pow(self, a: RatFunc, k: int) -> RatFunc:
        return a**k

    def random_poly(self, rng: random.Random, max_degree: int | None = None) -> FqPoly:
        degree = self.random_degree if max_degree is None else max_degree
        return FqPoly.from_coeffs(self.ctx, [rng.randrange(self.ctx.q) for _ in range(degree + 1)])
