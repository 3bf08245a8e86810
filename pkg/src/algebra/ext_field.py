"""Finite extensions F_q[T]/(m) with Zech-logarithm arithmetic"""

from functools import lru_cache

import numpy as np

from algebra.field_context import FieldContext
from algebra.fields import Field
from algebra.fq_poly import FqPoly
from algebra.irreducible import first_monic_irreducible
from lib.errors import InternalError, PreconditionError, ResourceBoundError


class ExtField(Field):
    """F_q[T]/(modulus) for a monic irreducible modulus of degree d.

    An element is the int sum c_i q^i of the coefficients of its reduced representative
    c_0 + c_1 T + ... + c_(d-1) T^(d-1). Multiplication goes through exp/log tables of a
    primitive element, addition through Zech logarithms.
    """

    def __init__(self, ctx: FieldContext, modulus: FqPoly) -> None:
        if not modulus.is_monic() or modulus.is_constant():
            raise PreconditionError(f"extension modulus must be monic of degree >= 1, got {modulus}")
        self.ctx = ctx
        self.modulus = modulus
        self.degree = modulus.deg()
        self.size = ctx.q**self.degree
        if self.size > ctx.limits.max_field_size:
            raise ResourceBoundError(
                f"field of size {ctx.q}^{self.degree} = {self.size} exceeds the bound {ctx.limits.max_field_size}"
            )
        self._order = self.size - 1
        self._tail = [ctx.neg(c) for c in modulus.coeff_list(self.degree)]
        self._build_tables()

    @property
    def tag(self) -> str:
        return f"F_{self.ctx.q}[T]/({self.modulus})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExtField) and other.ctx is self.ctx and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("ExtField", id(self.ctx), self.modulus))

    # digit helpers, used only while building tables

    def digits(self, a: int) -> list[int]:
        """Coordinates in the basis 1, T, ..., T^(d-1), low to high"""
        q = self.ctx.q
        result = []
        for _ in range(self.degree):
            a, digit = divmod(a, q)
            result.append(digit)
        return result

    def from_digits(self, digits: list[int]) -> int:
        value = 0
        for digit in reversed(digits):
            value = value * self.ctx.q + digit
        return value

    def _digit_add(self, a: list[int], b: list[int]) -> list[int]:
        add = self.ctx.add_table
        return [add[x][y] for x, y in zip(a, b)]

    def _digit_mul(self, a: list[int], b: list[int]) -> list[int]:
        ctx = self.ctx
        add, mul = ctx.add_table, ctx.mul_table
        d = self.degree
        product = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in enumerate(b):
                    product[i + j] = add[product[i + j]][row[y]]
        # reduce with T^d = -(m_0 + ... + m_(d-1) T^(d-1))
        for k in range(2 * d - 2, d - 1, -1):
            c = product[k]
            if c:
                row = mul[c]
                for i, t in enumerate(self._tail):
                    product[k - d + i] = add[product[k - d + i]][row[t]]
                product[k] = 0
        return product[:d]

    def _build_tables(self) -> None:
        order = self._order
        one = [1] + [0] * (self.degree - 1)
        candidates = [self.ctx.q] if self.degree > 1 else []
        candidates += [a for a in range(2, self.size) if a not in candidates]
        if order == 1:
            candidates = [1]
        for candidate in candidates:
            g = self.digits(candidate)
            exp = [0] * order
            current = one
            primitive = True
            for k in range(order):
                value = self.from_digits(current)
                if k > 0 and value == 1:
                    primitive = False
                    break
                exp[k] = value
                current = self._digit_mul(current, g)
            if primitive and self.from_digits(current) == 1:
                break
        else:
            raise InternalError(f"no primitive element in {self.tag}; modulus is not irreducible")
        self.primitive = candidate
        self._exp = exp
        self._log = [-1] * self.size
        for k, value in enumerate(exp):
            self._log[value] = k
        # zech[k] = log(1 + g^k), -1 when 1 + g^k = 0
        self._zech = [-1] * order
        for k in range(order):
            s = self.from_digits(self._digit_add(one, self.digits(exp[k])))
            self._zech[k] = self._log[s] if s else -1
        self._neg = [self.from_digits([self.ctx.neg(c) for c in self.digits(a)]) for a in range(self.size)]

    # field interface

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_fq(self, c: int) -> int:
        return c

    def from_poly(self, f: FqPoly) -> int:
        reduced = f % self.modulus
        return self.from_digits(reduced.coeff_list(self.degree))

    def to_poly(self, a: int) -> FqPoly:
        return FqPoly.from_int(self.ctx, a)

    def generator(self) -> int:
        """Class of T"""
        return self.from_poly(FqPoly.T(self.ctx))

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % self._order]
        if z < 0:
            return 0
        return self._exp[(la + z) % self._order]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self._order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self.tag}")
        return self._exp[-self._log[a] % self._order]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError(f"negative power of 0 in {self.tag}")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % self._order]

    def is_zero(self, a: int) -> bool:
        return a == 0

    def frobenius(self, a: int, k: int = 1) -> int:
        if a == 0:
            return 0
        return self._exp[(self._log[a] * pow(self.ctx.q, k, self._order)) % self._order]

    def eval_poly(self, f: FqPoly, x: int) -> int:
        """f(x) for f in F_q[T]"""
        result = 0
        previous = None
        for deg, c in f.items_desc():
            if previous is not None:
                result = self.mul(result, self.pow(x, previous - deg))
            result = self.add(result, c)
            previous = deg
        if previous:
            result = self.mul(result, self.pow(x, previous))
        return result

    def format(self, a: int) -> str:
        return str(self.to_poly(a))


@lru_cache(maxsize=None)
def build_extension(ctx: FieldContext, d: int) -> ExtField:
    """Field of size q^d defined by the lexicographically smallest monic irreducible of degree d"""
    if d < 1:
        raise PreconditionError(f"extension degree must be >= 1, got {d}")
    if ctx.q**d > ctx.limits.max_field_size:
        raise ResourceBoundError(
            f"extension of size {ctx.q}^{d} = {ctx.q**d} exceeds the bound {ctx.limits.max_field_size}"
        )
    return ExtField(ctx, first_monic_irreducible(ctx, d))


@lru_cache(maxsize=None)
def residue_field(prime: FqPoly) -> ExtField:
    """A/p for a monic irreducible p; the class of T is the image of T"""
    return ExtField(prime.ctx, prime)


def embed_prime_root(prime: FqPoly, field: ExtField) -> int:
    """First root of prime in the element enumeration order of field"""
    n = prime.deg()
    if field.degree % n != 0:
        raise PreconditionError(f"deg p = {n} does not divide the extension degree {field.degree}")
    for x in field.elements():
        if field.eval_poly(prime, x) == 0:
            return x
    raise InternalError(f"{prime} has no root in {field.tag}")


def subfield_express(x: int, t0: int, prime: FqPoly, field: ExtField) -> FqPoly:
    """c(T) of degree < deg p with c(t0) = x, for x fixed by the q^(deg p)-Frobenius"""
    ctx = field.ctx
    n = prime.deg()
    if field.frobenius(x, n) != x:
        raise PreconditionError(f"{field.format(x)} is not fixed by the q^{n}-Frobenius")
    if x == 0:
        return FqPoly.zero(ctx)
    columns = []
    power = 1
    for _ in range(n):
        columns.append(field.digits(power))
        power = field.mul(power, t0)
    columns.append(field.digits(x))
    matrix = ctx.gf(np.array(columns, dtype=np.int64).T)
    reduced = matrix.row_reduce().view(np.ndarray)
    solution = [0] * n
    for row in reduced:
        pivots = np.nonzero(row[:n])[0]
        if len(pivots) == 0:
            if row[n] != 0:
                raise InternalError(f"{field.format(x)} is not in the span of 1, t0, ..., t0^{n - 1}")
            continue
        solution[int(pivots[0])] = int(row[n])
    if len([row for row in reduced if np.any(row[:n])]) != n:
        raise InternalError("powers of t0 are linearly dependent; t0 is not a root of a degree-n prime")
    return FqPoly.from_coeffs(ctx, solution)
