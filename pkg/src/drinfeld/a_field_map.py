"""Structure maps A -> L determined by the image of T"""

from dataclasses import dataclass
from typing import Any

from algebra.ext_field import ExtField, residue_field
from algebra.field_context import FieldContext
from algebra.fields import Field, FunctionField
from algebra.fq_poly import FqPoly
from lib.errors import PreconditionError


@dataclass(frozen=True)
class AFieldMap:
    """i: A -> field with i(T) = image.

    prime is None for the generic characteristic (field = K, image = T) and the prime p with
    i(p) = 0 otherwise.
    """

    field: Field
    image: Any
    prime: FqPoly | None = None

    @property
    def ctx(self) -> FieldContext:
        return self.field.ctx

    def __call__(self, a: FqPoly) -> Any:
        """i(a) by Horner in the target field"""
        field = self.field
        if self.prime is None and isinstance(field, FunctionField):
            return field.from_poly(a)
        result = field.zero()
        previous = None
        for deg, c in a.items_desc():
            if previous is not None:
                result = field.mul(result, field.pow(self.image, previous - deg))
            result = field.add(result, field.from_fq(c))
            previous = deg
        if previous:
            result = field.mul(result, field.pow(self.image, previous))
        return result

    def is_generic(self) -> bool:
        return self.prime is None


def generic_map(ctx: FieldContext) -> AFieldMap:
    """The inclusion A -> K"""
    field = FunctionField(ctx)
    return AFieldMap(field, field.from_poly(FqPoly.T(ctx)))


def residue_map(prime: FqPoly) -> AFieldMap:
    """A -> A/p, T -> T mod p"""
    field = residue_field(prime)
    return AFieldMap(field, field.generator(), prime)


def prime_map(prime: FqPoly, field: ExtField, image: int) -> AFieldMap:
    """A -> field with T -> image, a root of prime"""
    if field.eval_poly(prime, image) != 0:
        raise PreconditionError(f"i(T) = {field.format(image)} is not a root of {prime}")
    return AFieldMap(field, image, prime)
