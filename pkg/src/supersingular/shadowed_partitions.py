"""Shadowed partitions P_2(n): pairs (S1, S2) with S1, S2, S2 + 1 partitioning {0, ..., n-1}"""

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from algebra.field_context import DEFAULT_MAX_PARTITION_LENGTH
from lib.errors import PreconditionError, ResourceBoundError
from series.index_set import IndexSet, subsets


@dataclass(frozen=True)
class ShadowedPair:
    """A monomino/domino tiling of N(n): monominoes at S1, dominoes at {i, i+1} for i in S2"""

    s1: IndexSet
    s2: IndexSet
    n: int

    def union(self) -> IndexSet:
        """S1 u S2, the set indexing D_n(S) and L_n(S)"""
        return self.s1 | self.s2

    def tiling(self) -> str:
        """Left to right, 'm' for a monomino and 'dd' for a domino"""
        parts = []
        i = 0
        while i < self.n:
            if i in self.s1:
                parts.append("m")
                i += 1
            else:
                parts.append("dd")
                i += 2
        return "".join(parts)

    def __str__(self) -> str:
        return f"({self.s1!r}, {self.s2!r})"


def is_shadowed_partition(s1: IndexSet, s2: IndexSet, n: int) -> bool:
    """S1, S2, S2 + 1 pairwise disjoint with union N(n); empty parts allowed"""
    shifted = s2.shifted(1)
    if (s1 & s2).mask or (s1 & shifted).mask or (s2 & shifted).mask:
        return False
    return (s1 | s2 | shifted) == IndexSet.full(n)


def _check_length(n: int, max_length: int) -> None:
    if n < 0:
        raise PreconditionError(f"P_2(n) needs n >= 0, got {n}")
    if n > max_length:
        raise ResourceBoundError(f"P_2({n}) exceeds the partition length bound {max_length}")


def _tilings(n: int) -> Iterator[tuple[int, int]]:
    """(mask S1, mask S2), monomino before domino at every position"""
    stack: list[tuple[int, int, int]] = [(0, 0, 0)]
    while stack:
        position, m1, m2 = stack.pop()
        if position == n:
            yield m1, m2
            continue
        # pushed in reverse so the monomino branch is explored first
        if position + 2 <= n:
            stack.append((position + 2, m1, m2 | 1 << position))
        stack.append((position + 1, m1 | 1 << position, m2))


@lru_cache(maxsize=64)
def enum_p2(n: int, max_length: int = DEFAULT_MAX_PARTITION_LENGTH) -> tuple[ShadowedPair, ...]:
    """All of P_2(n) in tiling order; P_2(0) holds the empty pair"""
    _check_length(n, max_length)
    return tuple(ShadowedPair(IndexSet(m1), IndexSet(m2), n) for m1, m2 in _tilings(n))


def count_p2(n: int) -> int:
    """|P_2(n)| from |P_2(n)| = |P_2(n-1)| + |P_2(n-2)|"""
    if n < 0:
        raise PreconditionError(f"P_2(n) needs n >= 0, got {n}")
    previous, current = 1, 1
    for _ in range(n - 1):
        previous, current = current, previous + current
    return current


def exhaustive_p2(n: int) -> list[ShadowedPair]:
    """P_2(n) by testing every pair of subsets, in (S1, S2) mask order"""
    return [
        ShadowedPair(s1, s2, n)
        for s1 in subsets(n)
        for s2 in subsets(n)
        if is_shadowed_partition(s1, s2, n)
    ]
