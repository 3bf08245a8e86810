"""Finite subsets of N stored as bit masks, with shadow, weight and monomial data"""

from collections.abc import Iterable, Iterator

from algebra.field_context import FieldContext
from algebra.fq_poly import DegreeBoundError, FqPoly
from lib.errors import PreconditionError

MAX_ELEMENT = 64


class IndexSet:
    """S subset of {0, ..., 63}; bit i of mask is set iff i in S"""

    __slots__ = ("mask",)

    def __init__(self, mask: int = 0) -> None:
        if mask < 0 or mask >> MAX_ELEMENT:
            raise PreconditionError(f"index sets hold elements below {MAX_ELEMENT}")
        self.mask = mask

    @classmethod
    def of(cls, elements: Iterable[int]) -> "IndexSet":
        mask = 0
        for i in elements:
            if i < 0 or i >= MAX_ELEMENT:
                raise PreconditionError(f"index {i} outside 0..{MAX_ELEMENT - 1}")
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def full(cls, n: int) -> "IndexSet":
        """N(n) = {0, ..., n-1}"""
        return cls((1 << n) - 1)

    def elements(self) -> list[int]:
        result = []
        mask, i = self.mask, 0
        while mask:
            if mask & 1:
                result.append(i)
            mask >>= 1
            i += 1
        return result

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def __contains__(self, i: int) -> bool:
        return i >= 0 and bool(self.mask >> i & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IndexSet) and other.mask == self.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __or__(self, other: "IndexSet") -> "IndexSet":
        return IndexSet(self.mask | other.mask)

    def __and__(self, other: "IndexSet") -> "IndexSet":
        return IndexSet(self.mask & other.mask)

    def shifted(self, k: int = 1) -> "IndexSet":
        """S + k"""
        return IndexSet(self.mask << k)

    def is_subset_of(self, other: "IndexSet") -> bool:
        return self.mask & ~other.mask == 0

    def shadow_starts(self) -> "IndexSet":
        """M(S) = {i in S : i - 1 not in S}"""
        return IndexSet(self.mask & ~(self.mask << 1))

    def weight(self, q: int) -> int:
        """w(S) = sum q^i"""
        return sum(q**i for i in self.elements())

    def __repr__(self) -> str:
        return "{" + ",".join(str(i) for i in self.elements()) + "}"


def subsets(n: int) -> Iterator[IndexSet]:
    """All subsets of N(n) in increasing mask order"""
    for mask in range(1 << n):
        yield IndexSet(mask)


def shadow_exponent(s: IndexSet, q: int) -> int:
    """Exponent of T in m(S) = prod_{i in M(S)} T^(q^i - 1)"""
    starts = s.shadow_starts()
    return starts.weight(q) - len(starts)


def shadow_stats(s: IndexSet, ctx: FieldContext) -> tuple[IndexSet, int, FqPoly]:
    """(M(S), w(S), m(S))"""
    exponent = shadow_exponent(s, ctx.q)
    if exponent > ctx.limits.max_degree:
        raise DegreeBoundError(f"m(S) for S = {s} has degree {exponent} above the bound {ctx.limits.max_degree}")
    return s.shadow_starts(), s.weight(ctx.q), FqPoly.monomial(ctx, exponent)
