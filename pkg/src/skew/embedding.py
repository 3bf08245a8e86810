"""Embeddings of finite A-fields into larger extensions, and kernel counting by exhaustion"""

from algebra.ext_field import ExtField, embed_prime_root
from algebra.fq_poly import FqPoly
from lib.errors import PreconditionError
from skew.skew_poly import SkewPoly, skew_eval


class FieldEmbedding:
    """F_q[T]/(m) -> target, T -> image, for a root image of m in target"""

    def __init__(self, source: ExtField, target: ExtField, image: int | None = None) -> None:
        if source.ctx is not target.ctx:
            raise PreconditionError("embedding between fields over different F_q")
        if image is None:
            image = embed_prime_root(source.modulus, target)
        elif target.eval_poly(source.modulus, image) != 0:
            raise PreconditionError(f"{target.format(image)} is not a root of {source.modulus}")
        self.source = source
        self.target = target
        self.image = image
        self._table: list[int] | None = None

    def __call__(self, x: int) -> int:
        if self._table is None:
            self._table = [self.target.eval_poly(self.source.to_poly(a), self.image) for a in self.source.elements()]
        return self._table[x]

    def map_poly(self, f: FqPoly) -> int:
        return self.target.eval_poly(f, self.image)


def count_roots_in(f: SkewPoly, field: ExtField, embedding: FieldEmbedding | None = None) -> int:
    """|{x in field : f(x) = 0}| by exhaustive evaluation"""
    if f.field != field and embedding is None:
        if isinstance(f.field, ExtField) and field.ctx is f.field.ctx:
            embedding = FieldEmbedding(f.field, field)
        else:
            raise PreconditionError(f"coefficients in {f.field.tag} do not embed into {field.tag}")
    if embedding is not None and embedding.target != field:
        raise PreconditionError("embedding target differs from the counting field")
    count = 0
    for x in field.elements():
        value = skew_eval(f, x, field, embedding) if embedding is not None else skew_eval(f, x)
        if value == 0:
            count += 1
    return count
