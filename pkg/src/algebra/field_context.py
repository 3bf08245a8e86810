"""Finite field F_q context: canonical modulus, element tables and resource limits"""

import re
from dataclasses import dataclass
from functools import lru_cache

import galois
import numpy as np

from lib.errors import PreconditionError, ResourceBoundError, UsageError

DEFAULT_MAX_Q = 64
DEFAULT_MAX_DEGREE = 200_000
DEFAULT_MAX_FIELD_SIZE = 4096
DEFAULT_MAX_PARTITION_LENGTH = 30
DEFAULT_MAX_PERIOD_TERMS = 10
DEFAULT_MAX_PRECISION = 1 << 16


@dataclass(frozen=True)
class Limits:
    """Resource bounds enforced by every computation built on a context"""

    max_q: int = DEFAULT_MAX_Q
    max_degree: int = DEFAULT_MAX_DEGREE
    max_field_size: int = DEFAULT_MAX_FIELD_SIZE
    max_partition_length: int = DEFAULT_MAX_PARTITION_LENGTH
    max_period_terms: int = DEFAULT_MAX_PERIOD_TERMS
    max_precision: int = DEFAULT_MAX_PRECISION


class FieldContext:
    """F_q with q = p^e.

    Elements are the integers 0..q-1; the base-p digits of an element are its coordinates over the
    prime field in the basis 1, u, ..., u^(e-1) where u is a root of the modulus. The integer
    representation is the one used by galois, so the tables below are read straight from it.
    """

    def __init__(self, p: int, e: int, limits: Limits) -> None:
        self.p = p
        self.e = e
        self.q = p**e
        self.limits = limits
        if e == 1:
            self.gf = galois.GF(p)
            self.modulus: tuple[int, ...] = (0, 1)
        else:
            modulus = galois.irreducible_poly(p, e, method="min")
            self.gf = galois.GF(p**e, irreducible_poly=modulus)
            # low to high coefficients
            self.modulus = tuple(int(c) for c in reversed(modulus.coeffs.tolist()))

        q = self.q
        left = self.gf(np.repeat(np.arange(q), q))
        right = self.gf(np.tile(np.arange(q), q))
        self.add_table: list[list[int]] = (left + right).view(np.ndarray).reshape(q, q).tolist()
        self.mul_table: list[list[int]] = (left * right).view(np.ndarray).reshape(q, q).tolist()
        elements = self.gf(np.arange(q))
        self.neg_table: list[int] = (-elements).view(np.ndarray).tolist()
        self.inv_table: list[int] = [0] + (self.gf(1) / self.gf(np.arange(1, q))).view(np.ndarray).tolist()
        self.frob_table: list[int] = (elements**p).view(np.ndarray).tolist()

        self.add_array = np.array(self.add_table, dtype=np.int64)
        self.mul_array = np.array(self.mul_table, dtype=np.int64)
        self.neg_array = np.array(self.neg_table, dtype=np.int64)

    def convolve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Coefficient arrays of a product of polynomials over F_q"""
        if self.e == 1:
            return np.convolve(a, b) % self.p
        return np.convolve(self.gf(a), self.gf(b)).view(np.ndarray).astype(np.int64)

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p}, e={self.e})"

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul_table[a][self.inv(b)]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self.mul_table[result][a]
            a = self.mul_table[a][a]
            k >>= 1
        return result

    def frobenius_p(self, a: int, i: int = 1) -> int:
        """a^(p^i)"""
        for _ in range(i % self.e):
            a = self.frob_table[a]
        return a

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield"""
        return n % self.p

    def coords(self, a: int) -> list[int]:
        """Coordinates of a over the prime field, low to high"""
        digits = []
        for _ in range(self.e):
            a, digit = divmod(a, self.p)
            digits.append(digit)
        return digits

    def from_coords(self, digits: list[int]) -> int:
        value = 0
        for digit in reversed(digits):
            value = value * self.p + digit % self.p
        return value

    def generator(self) -> int:
        """The class u of the indeterminate of the modulus"""
        if self.e == 1:
            raise PreconditionError("F_q is a prime field, it has no generator u")
        return self.p

    def elements(self) -> range:
        return range(self.q)


@lru_cache(maxsize=None)
def make_context(p: int, e: int = 1, limits: Limits = Limits()) -> FieldContext:
    """Deterministic context for F_(p^e); identical arguments yield the identical object"""
    if not isinstance(p, int) or p < 2 or not galois.is_prime(p):
        raise PreconditionError(f"characteristic must be a prime, got {p}")
    if e < 1:
        raise PreconditionError(f"extension degree must be >= 1, got {e}")
    if p**e > limits.max_q:
        raise ResourceBoundError(f"q = {p}^{e} = {p**e} exceeds the configured bound q <= {limits.max_q}")
    return FieldContext(p, e, limits)


_Q_SPEC = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_q(text: str) -> tuple[int, int]:
    """Read q written either "p^e" or a prime power "q", into (p, e)"""
    match = _Q_SPEC.match(text)
    if not match:
        raise UsageError(f"q must be a prime power written 'q' or 'p^e', got '{text}'")
    base = int(match.group(1))
    if match.group(2) is not None:
        exponent = int(match.group(2))
        if base < 2 or not galois.is_prime(base):
            raise UsageError(f"q = {text}: base {base} is not a prime")
        if exponent < 1:
            raise UsageError(f"q = {text}: exponent must be >= 1")
        return base, exponent
    if base < 2 or not galois.is_prime_power(base):
        raise UsageError(f"q = {text} is not a prime power")
    primes, exponents = galois.factors(base)
    return int(primes[0]), int(exponents[0])


def context_from_text(text: str, limits: Limits = Limits()) -> FieldContext:
    """The context of q as written on the command line"""
    p, e = parse_q(text)
    return make_context(p, e, limits)
