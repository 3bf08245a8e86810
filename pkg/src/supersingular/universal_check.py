"""mu_n = gamma_n = ss_p mod p for every monic prime p of degree n"""

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from algebra.irreducible import monic_irreducibles
from supersingular.j_poly import JPoly
from supersingular.mu_gamma import Kind, mu_gamma
from supersingular.ss_oracle import SsOracleResult, ss_oracle

PolyProvider = Callable[[FieldContext, int, Kind], JPoly]


@dataclass(frozen=True)
class UniversalEntry:
    """Outcome of the three-way comparison at one prime"""

    prime: FqPoly
    oracle: SsOracleResult
    mu_mod_p: JPoly
    gamma_mod_p: JPoly

    @property
    def degree(self) -> int:
        return self.prime.deg()

    @property
    def u_size(self) -> int:
        return len(self.oracle.supersingular)

    @property
    def passed(self) -> bool:
        return self.mu_mod_p == self.oracle.ss and self.gamma_mod_p == self.oracle.ss

    @property
    def parity_holds(self) -> bool:
        """0 in U_p exactly when deg p is odd"""
        return self.oracle.contains_zero() == (self.degree % 2 == 1)

    def to_dict(self) -> dict[str, Any]:
        return {
            "prime": str(self.prime),
            "degree": self.degree,
            "|U|": self.u_size,
            "ss": str(self.oracle.ss),
            "mu_mod_p": str(self.mu_mod_p),
            "gamma_mod_p": str(self.gamma_mod_p),
            "pass": self.passed,
        }


def universal_check(ctx: FieldContext, n: int, provider: PolyProvider = mu_gamma) -> list[UniversalEntry]:
    """One entry per monic irreducible of degree n, in enumeration order"""
    mu = provider(ctx, n, Kind.MU)
    gamma = provider(ctx, n, Kind.GAMMA)
    entries = []
    for prime in monic_irreducibles(ctx, n):
        entries.append(UniversalEntry(prime, ss_oracle(prime), mu.reduce_mod(prime), gamma.reduce_mod(prime)))
    return entries
