"""Closed forms of the log and exp coefficients against their recursions, on random modules"""

import random
import time

from algebra.field_context import FieldContext
from algebra.fields import FunctionField
from algebra.rat_func import RatFunc
from drinfeld.drinfeld_module import DrinfeldModule
from drinfeld.a_field_map import generic_map
from lib.log.logger import Logger
from series.log_exp import (
    composition_residuals,
    functional_equation_residuals,
    log_exp_coeffs,
    log_exp_numerators,
)
from supersingular.eisenstein import eisenstein_numerators
from verifiers.base_verifier import BaseVerifier

SAMPLE_DEGREE = 3


class EisensteinVerifier(BaseVerifier):
    suite = "eisenstein"

    def __init__(self, logger: Logger, seed: int, samples: int):
        super().__init__(logger)
        self.seed = seed
        self.samples = samples

    def random_modules(self, ctx: FieldContext) -> list[DrinfeldModule]:
        """Seeded, so that two runs check the same modules"""
        rng = random.Random(self.seed)
        field = FunctionField(ctx)
        a_map = generic_map(ctx)
        modules = []
        for _ in range(self.samples):
            g = field.random_poly(rng, SAMPLE_DEGREE)
            delta = field.random_poly(rng, SAMPLE_DEGREE)
            while delta.is_zero():
                delta = field.random_poly(rng, SAMPLE_DEGREE)
            modules.append(DrinfeldModule(a_map, RatFunc(g), RatFunc(delta)))
        return modules

    def run(self, ctx: FieldContext, max_n: int) -> None:
        for dm in self.random_modules(ctx):
            started = time.perf_counter()
            big_b, big_a = log_exp_numerators(dm, max_n)
            mismatches = [n for n in range(max_n + 1) if eisenstein_numerators(dm, n) != (big_a[n], big_b[n])]
            self.record(
                f"g={dm.g} Delta={dm.delta} numerators",
                not mismatches,
                "eisenstein-closed-form",
                f"closed and recursive numerators differ at n = {mismatches}",
                started,
            )
            started = time.perf_counter()
            betas, alphas = log_exp_coeffs(dm, max_n)
            log_side, exp_side = functional_equation_residuals(dm, betas, alphas)
            residuals = composition_residuals(betas, alphas) + log_side + exp_side
            self.record(
                f"g={dm.g} Delta={dm.delta} log/exp",
                all(r.is_zero() for r in residuals),
                "log-exp-identity",
                "log(exp(z)) = z or a functional equation fails below z^(q^N)",
                started,
            )
