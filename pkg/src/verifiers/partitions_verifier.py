"""Enumeration of P_2(n) against its count and a brute-force search"""

import time

from algebra.field_context import FieldContext
from supersingular.shadowed_partitions import count_p2, enum_p2, exhaustive_p2, is_shadowed_partition
from verifiers.base_verifier import BaseVerifier

EXHAUSTIVE_MAX_N = 10


class PartitionsVerifier(BaseVerifier):
    suite = "partitions"

    def run(self, ctx: FieldContext, max_n: int) -> None:
        for n in range(max_n + 1):
            started = time.perf_counter()
            pairs = enum_p2(n, ctx.limits.max_partition_length)
            self.record(
                f"|P_2({n})|",
                len(pairs) == count_p2(n) == len(set(pairs)),
                "partitions-count",
                f"{len(pairs)} pairs enumerated, {len(set(pairs))} distinct, count {count_p2(n)}",
                started,
            )
            self.record(
                f"P_2({n}) shadowed",
                all(is_shadowed_partition(pair.s1, pair.s2, n) for pair in pairs),
                "partitions-predicate",
                f"an enumerated pair of P_2({n}) is not a shadowed partition",
            )
            if n <= EXHAUSTIVE_MAX_N:
                started = time.perf_counter()
                self.record(
                    f"P_2({n}) exhaustive",
                    set(exhaustive_p2(n)) == set(pairs),
                    "partitions-exhaustive",
                    f"brute-force search over subsets disagrees with the enumeration of P_2({n})",
                    started,
                )
