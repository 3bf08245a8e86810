"""Supersingular j-invariants mod p by exhaustive search over the quadratic extension of A/p"""

from dataclasses import dataclass

from algebra.ext_field import ExtField, build_extension, embed_prime_root, subfield_express
from algebra.fq_poly import FqPoly
from algebra.irreducible import is_irreducible
from drinfeld.a_field_map import AFieldMap, prime_map
from drinfeld.drinfeld_module import DrinfeldModule, is_supersingular
from lib.errors import InternalError, PreconditionError
from supersingular.j_poly import JPoly


@dataclass(frozen=True)
class SsOracleResult:
    """U_p as elements of the field of size q^(2n), and ss_p(x) with coefficients in A/p"""

    prime: FqPoly
    field: ExtField
    root: int
    supersingular: tuple[int, ...]
    ss: JPoly

    @property
    def degree(self) -> int:
        return self.prime.deg()

    def contains_zero(self) -> bool:
        return 0 in self.supersingular


def module_with_j(a_map: AFieldMap, j: int) -> DrinfeldModule:
    """(g, Delta) = (0, 1) for j = 0 and (1, 1/j) otherwise"""
    field = a_map.field
    if j == 0:
        return DrinfeldModule(a_map, field.zero(), field.one())
    return DrinfeldModule(a_map, field.one(), field.inv(j))


def ss_oracle(prime: FqPoly) -> SsOracleResult:
    """U_p = {j : a module with invariant j is supersingular at p}, ss_p = prod_(j in U_p, j != 0) (x - j)"""
    ctx = prime.ctx
    if prime.is_constant() or not prime.is_monic() or not is_irreducible(prime):
        raise PreconditionError(f"{prime} is not a monic irreducible polynomial")
    n = prime.deg()
    field = build_extension(ctx, 2 * n)
    root = embed_prime_root(prime, field)
    a_map = prime_map(prime, field, root)
    found = tuple(j for j in field.elements() if is_supersingular(module_with_j(a_map, j), prime))
    if {field.frobenius(j, n) for j in found} != set(found):
        raise InternalError(f"supersingular set mod {prime} is not stable under the q^{n}-Frobenius")
    # coefficients of prod (x - j), low to high
    product = [field.one()]
    for j in found:
        if j == 0:
            continue
        shifted = [field.zero()] + product
        for i, c in enumerate(product):
            shifted[i] = field.add(shifted[i], field.neg(field.mul(j, c)))
        product = shifted
    terms = {}
    for exp, c in enumerate(product):
        if field.frobenius(c, n) != c:
            raise InternalError(f"coefficient of x^{exp} in ss_{prime} is not fixed by the q^{n}-Frobenius")
        terms[exp] = subfield_express(c, root, prime, field)
    return SsOracleResult(prime, field, root, found, JPoly.of(ctx, terms))
