"""Signed infinity used as degree of the zero polynomial and valuation of zero"""

from fractions import Fraction
from functools import total_ordering
from typing import Union

Number = Union[int, Fraction]


@total_ordering
class Infinity:
    """+oo or -oo, comparable with ints and Fractions, absorbing under addition"""

    __slots__ = ("positive",)

    def __init__(self, positive: bool = True) -> None:
        self.positive = positive

    def __neg__(self) -> "Infinity":
        return POS_INF if not self.positive else NEG_INF

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Infinity) and other.positive == self.positive

    def __hash__(self) -> int:
        return hash(("Infinity", self.positive))

    def __gt__(self, other: object) -> bool:
        if self == other:
            return False
        if isinstance(other, (int, Fraction, Infinity)):
            return self.positive
        return NotImplemented

    def __add__(self, other: "Number | Infinity") -> "Infinity":
        if isinstance(other, Infinity) and other.positive != self.positive:
            raise ArithmeticError("+oo + -oo is undefined")
        return self

    __radd__ = __add__

    def __sub__(self, other: "Number | Infinity") -> "Infinity":
        if isinstance(other, Infinity):
            return self + (-other)
        return self

    def __rsub__(self, other: Number) -> "Infinity":
        return -self

    def __mul__(self, other: Number) -> "Infinity":
        if other == 0:
            raise ArithmeticError("0 * oo is undefined")
        return self if other > 0 else -self

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "+inf" if self.positive else "-inf"

    __str__ = __repr__


POS_INF = Infinity(True)
NEG_INF = Infinity(False)

Valuation = Union[int, Infinity]
RationalValuation = Union[Fraction, int, Infinity]


def is_infinite(value: object) -> bool:
    """True for either signed infinity"""
    return isinstance(value, Infinity)
