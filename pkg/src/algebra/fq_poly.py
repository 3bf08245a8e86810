"""Polynomials in A = F_q[T], stored sparsely as {degree: coefficient}"""

import heapq
from collections.abc import Iterable, Iterator, Mapping

import numpy as np

from algebra.field_context import FieldContext
from algebra.infinity import NEG_INF, Valuation
from lib.errors import InternalError, ResourceBoundError


class DegreeBoundError(ResourceBoundError):
    """Polynomial degree above the configured bound"""


# term-pair count above which a product goes through a dense convolution
DENSE_PRODUCT_THRESHOLD = 4096


class FqPoly:
    """Immutable element of F_q[T].

    Coefficients are F_q elements (ints in 0..q-1). Zero coefficients are never stored, so the
    representation is canonical and equality is structural.
    """

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: FieldContext, terms: Mapping[int, int] | None = None, _trusted: bool = False) -> None:
        self.ctx = ctx
        if terms is None:
            self._terms: dict[int, int] = {}
        elif _trusted:
            self._terms = dict(terms)
        else:
            clean = {}
            for deg, coeff in terms.items():
                if deg < 0:
                    raise ValueError(f"negative degree {deg} in polynomial")
                coeff %= ctx.q
                if coeff:
                    clean[deg] = coeff
            self._terms = clean
        self._hash: int | None = None
        if self._terms and max(self._terms) > ctx.limits.max_degree:
            raise DegreeBoundError(
                f"polynomial degree {max(self._terms)} exceeds the configured bound {ctx.limits.max_degree}"
            )

    # construction helpers

    @classmethod
    def zero(cls, ctx: FieldContext) -> "FqPoly":
        return cls(ctx, None, _trusted=True)

    @classmethod
    def one(cls, ctx: FieldContext) -> "FqPoly":
        return cls(ctx, {0: 1}, _trusted=True)

    @classmethod
    def constant(cls, ctx: FieldContext, c: int) -> "FqPoly":
        return cls(ctx, {0: c})

    @classmethod
    def monomial(cls, ctx: FieldContext, deg: int, c: int = 1) -> "FqPoly":
        return cls(ctx, {deg: c})

    @classmethod
    def T(cls, ctx: FieldContext) -> "FqPoly":
        return cls(ctx, {1: 1}, _trusted=True)

    @classmethod
    def from_coeffs(cls, ctx: FieldContext, coeffs: Iterable[int]) -> "FqPoly":
        """Build from coefficients listed from the constant term upwards"""
        return cls(ctx, {deg: c for deg, c in enumerate(coeffs)})

    @classmethod
    def from_int(cls, ctx: FieldContext, value: int) -> "FqPoly":
        """Inverse of to_int: base-q digits are the coefficients"""
        terms = {}
        deg = 0
        while value:
            value, digit = divmod(value, ctx.q)
            if digit:
                terms[deg] = digit
            deg += 1
        return cls(ctx, terms, _trusted=True)

    # inspection

    @property
    def terms(self) -> Mapping[int, int]:
        return self._terms

    def items_desc(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def is_constant(self) -> bool:
        return not self._terms or self._terms.keys() == {0}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> Valuation:
        """Degree in T, -oo for the zero polynomial"""
        if not self._terms:
            return NEG_INF
        return max(self._terms)

    def deg(self) -> int:
        """Integer degree; the zero polynomial has none"""
        if not self._terms:
            raise ValueError("the zero polynomial has no integer degree")
        return max(self._terms)

    def t_order(self) -> int:
        """Largest k with T^k dividing self"""
        if not self._terms:
            raise ValueError("T-adic order of zero is infinite")
        return min(self._terms)

    def leading_coeff(self) -> int:
        if not self._terms:
            return 0
        return self._terms[max(self._terms)]

    def coeff(self, deg: int) -> int:
        return self._terms.get(deg, 0)

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def is_monic(self) -> bool:
        return self.leading_coeff() == 1

    def to_int(self) -> int:
        """Encoding sum c_i q^i; ordering by it is the lexicographic order from the top coefficient down"""
        value = 0
        q = self.ctx.q
        for deg, c in self._terms.items():
            value += c * q**deg
        return value

    def coeff_list(self, length: int | None = None) -> list[int]:
        """Dense coefficients from the constant term upwards"""
        if length is None:
            length = self.deg() + 1 if self._terms else 0
        dense = [0] * length
        for deg, c in self._terms.items():
            if deg < length:
                dense[deg] = c
        return dense

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FqPoly):
            return self.ctx is other.ctx and self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other % self.ctx.q} if other % self.ctx.q else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((id(self.ctx), frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"FqPoly({self})"

    def __str__(self) -> str:
        from lib.parser import format_poly

        return format_poly(self)

    # arithmetic

    def _coerce(self, other: "FqPoly | int") -> "FqPoly":
        if isinstance(other, FqPoly):
            if other.ctx is not self.ctx:
                raise ValueError("polynomials over different fields")
            return other
        return FqPoly.constant(self.ctx, self.ctx.from_int(other))

    def __add__(self, other: "FqPoly | int") -> "FqPoly":
        other = self._coerce(other)
        if len(other._terms) > len(self._terms):
            return other + self
        add = self.ctx.add_table
        terms = dict(self._terms)
        for deg, c in other._terms.items():
            s = add[terms.get(deg, 0)][c]
            if s:
                terms[deg] = s
            else:
                terms.pop(deg, None)
        return FqPoly(self.ctx, terms, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "FqPoly":
        neg = self.ctx.neg_table
        return FqPoly(self.ctx, {deg: neg[c] for deg, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other: "FqPoly | int") -> "FqPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "FqPoly | int") -> "FqPoly":
        return self._coerce(other) - self

    def scale(self, c: int) -> "FqPoly":
        c %= self.ctx.q
        if c == 0:
            return FqPoly.zero(self.ctx)
        if c == 1:
            return self
        mul = self.ctx.mul_table[c]
        return FqPoly(self.ctx, {deg: mul[a] for deg, a in self._terms.items()}, _trusted=True)

    def shift(self, k: int) -> "FqPoly":
        """self * T^k"""
        if k == 0:
            return self
        return FqPoly(self.ctx, {deg + k: c for deg, c in self._terms.items()})

    def __mul__(self, other: "FqPoly | int") -> "FqPoly":
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return FqPoly.zero(self.ctx)
        if len(self._terms) < len(other._terms):
            small, large = self._terms, other._terms
        else:
            small, large = other._terms, self._terms
        if len(small) == 1:
            ((deg, c),) = small.items()
            return FqPoly(self.ctx, large).scale(c).shift(deg)
        if max(self._terms) + max(other._terms) > self.ctx.limits.max_degree:
            raise DegreeBoundError(
                f"product degree {max(self._terms) + max(other._terms)} exceeds the configured bound"
                f" {self.ctx.limits.max_degree}"
            )
        if len(small) * len(large) > DENSE_PRODUCT_THRESHOLD:
            span = (max(small) - min(small) + 1) * (max(large) - min(large) + 1)
            if span <= 256 * len(small) * len(large):
                return self._dense_mul(other)
        add = self.ctx.add_table
        mul = self.ctx.mul_table
        result: dict[int, int] = {}
        get = result.get
        for d1, c1 in small.items():
            row = mul[c1]
            for d2, c2 in large.items():
                d = d1 + d2
                result[d] = add[get(d, 0)][row[c2]]
        return FqPoly(self.ctx, {d: c for d, c in result.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def _dense_coeffs(self) -> tuple[int, np.ndarray]:
        low = self.t_order()
        coeffs = np.zeros(self.deg() - low + 1, dtype=np.int64)
        for deg, c in self._terms.items():
            coeffs[deg - low] = c
        return low, coeffs

    def _dense_mul(self, other: "FqPoly") -> "FqPoly":
        low1, a = self._dense_coeffs()
        low2, b = other._dense_coeffs()
        product = self.ctx.convolve(a, b)
        nonzero = np.flatnonzero(product)
        terms = dict(zip((nonzero + low1 + low2).tolist(), product[nonzero].tolist()))
        return FqPoly(self.ctx, terms, _trusted=True)

    def frobenius_p(self, i: int = 1) -> "FqPoly":
        """self^(p^i), computed as sum c^(p^i) T^(d p^i)"""
        factor = self.ctx.p**i
        return FqPoly(self.ctx, {deg * factor: self.ctx.frobenius_p(c, i) for deg, c in self._terms.items()})

    def frobenius(self, k: int = 1) -> "FqPoly":
        """self^(q^k) = self(T^(q^k)); coefficients in F_q are fixed by the q-power map"""
        if k == 0:
            return self
        factor = self.ctx.q**k
        if self._terms and max(self._terms) * factor > self.ctx.limits.max_degree:
            raise DegreeBoundError(
                f"q^{k}-th power of a degree {max(self._terms)} polynomial exceeds the configured bound"
                f" {self.ctx.limits.max_degree}"
            )
        return FqPoly(self.ctx, {deg * factor: c for deg, c in self._terms.items()}, _trusted=True)

    def __pow__(self, k: int) -> "FqPoly":
        """Power via the base-p digits of k, each p^i-th power being a coefficient-wise Frobenius"""
        if k < 0:
            raise ValueError("negative power of a polynomial")
        if k == 0:
            return FqPoly.one(self.ctx)
        if self.is_zero():
            return self
        if self.is_monomial():
            ((deg, c),) = self._terms.items()
            return FqPoly.monomial(self.ctx, deg * k, self.ctx.pow(c, k))
        if self.deg() * k > self.ctx.limits.max_degree:
            raise DegreeBoundError(
                f"power {k} of a degree {self.deg()} polynomial exceeds the configured bound"
                f" {self.ctx.limits.max_degree}"
            )
        p = self.ctx.p
        result = FqPoly.one(self.ctx)
        base = self
        i = 0
        while k:
            k, digit = divmod(k, p)
            if digit:
                power = base.frobenius_p(i) if i else base
                for _ in range(digit):
                    result = result * power
            i += 1
        return result

    def divmod(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        """Sparse long division, a = q b + r with deg r < deg b"""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        db = other.deg()
        if not self._terms or self.deg() < db:
            return FqPoly.zero(ctx), self
        lead_inv = ctx.inv(other.leading_coeff())
        if db == 0:
            return self.scale(lead_inv), FqPoly.zero(ctx)
        tail = [(deg, c) for deg, c in other._terms.items() if deg != db]
        add, mul, neg = ctx.add_table, ctx.mul_table, ctx.neg_table
        rem = dict(self._terms)
        heap = [-deg for deg in rem if deg >= db]
        heapq.heapify(heap)
        quotient: dict[int, int] = {}
        while heap:
            deg = -heapq.heappop(heap)
            c = rem.pop(deg, 0)
            if not c:
                continue
            factor = mul[c][lead_inv]
            shift = deg - db
            quotient[shift] = factor
            nfactor = neg[factor]
            row = mul[nfactor]
            for d2, c2 in tail:
                d = d2 + shift
                old = rem.get(d, 0)
                new = add[old][row[c2]]
                if new:
                    rem[d] = new
                    if not old and d >= db:
                        heapq.heappush(heap, -d)
                elif old:
                    del rem[d]
        return FqPoly(ctx, quotient, _trusted=True), FqPoly(ctx, rem, _trusted=True)

    def __floordiv__(self, other: "FqPoly") -> "FqPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "FqPoly") -> "FqPoly":
        """Quotient of an exact division; a nonzero remainder is an internal error"""
        quotient, remainder = self.divmod(other)
        if not remainder.is_zero():
            raise InternalError(f"exact division left a nonzero remainder of degree {remainder.deg()}")
        return quotient

    def monic(self) -> "FqPoly":
        if not self._terms:
            return self
        return self.scale(self.ctx.inv(self.leading_coeff()))

    def gcd(self, other: "FqPoly") -> "FqPoly":
        """Monic gcd; zero only when both inputs are zero"""
        a, b = self, self._coerce(other)
        if a.is_zero():
            return b.monic()
        if b.is_zero():
            return a.monic()
        if a.is_constant() or b.is_constant():
            return FqPoly.one(self.ctx)
        if a.is_monomial() or b.is_monomial():
            return FqPoly.monomial(self.ctx, min(a.t_order(), b.t_order()))
        if a.deg() < b.deg():
            a, b = b, a
        while not b.is_zero():
            a, b = b, a % b
            if not b.is_zero() and b.is_monomial():
                return FqPoly.monomial(self.ctx, min(a.t_order(), b.t_order()))
        return a.monic()

    def evaluate(self, x: int) -> int:
        """Value at an element of F_q"""
        add, mul = self.ctx.add_table, self.ctx.mul_table
        result = 0
        previous = None
        for deg, c in self.items_desc():
            if previous is not None:
                result = mul[result][self.ctx.pow(x, previous - deg)]
            result = add[result][c]
            previous = deg
        if previous:
            result = mul[result][self.ctx.pow(x, previous)]
        return result
