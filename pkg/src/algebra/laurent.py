"""Laurent series in u = 1/T, the completion K_oo of K at the infinite place"""

import math

import numpy as np

from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from algebra.infinity import POS_INF, Valuation
from algebra.rat_func import RatFunc
from lib.errors import PrecisionError, PreconditionError

_EMPTY = np.zeros(0, dtype=np.int64)

# smallest recurrence shift for which division runs block-wise on arrays
VECTOR_BLOCK = 16


def _min_prec(*precs: int | None) -> int | None:
    known = [p for p in precs if p is not None]
    return min(known) if known else None


class LaurentSeries:
    """sum a_k u^k with a_k in F_q, known exactly for k < prec (prec None: the series is exact).

    coeffs[i] is the coefficient of u^(start + i). The stored form has a nonzero first and last
    coefficient and no coefficient at or beyond prec, so start is the valuation of a nonzero series.
    v(T) = -1 because T = u^-1.
    """

    __slots__ = ("ctx", "start", "coeffs", "prec")

    def __init__(self, ctx: FieldContext, start: int, coeffs: np.ndarray, prec: int | None = None) -> None:
        self.ctx = ctx
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if prec is not None and len(coeffs) and start + len(coeffs) > prec:
            coeffs = coeffs[: max(prec - start, 0)]
        nonzero = np.flatnonzero(coeffs)
        if len(nonzero) == 0:
            self.start, self.coeffs = 0, _EMPTY
        else:
            first, last = int(nonzero[0]), int(nonzero[-1])
            self.start, self.coeffs = start + first, coeffs[first : last + 1]
        self.prec = prec

    # construction

    @classmethod
    def zero(cls, ctx: FieldContext, prec: int | None = None) -> "LaurentSeries":
        return cls(ctx, 0, _EMPTY, prec)

    @classmethod
    def monomial(cls, ctx: FieldContext, k: int, c: int = 1) -> "LaurentSeries":
        return cls(ctx, k, np.array([c % ctx.q], dtype=np.int64))

    @classmethod
    def from_poly(cls, ctx: FieldContext, f: FqPoly) -> "LaurentSeries":
        if f.is_zero():
            return cls.zero(ctx)
        top = f.deg()
        low = f.t_order()
        coeffs = np.zeros(top - low + 1, dtype=np.int64)
        for deg, c in f:
            coeffs[top - deg] = c
        return cls(ctx, -top, coeffs)

    @classmethod
    def from_ratfunc(cls, r: RatFunc, prec: int) -> "LaurentSeries":
        """Expansion of r, exact when the denominator is a power of T"""
        series = cls.from_poly(r.ctx, r.num)
        if r.den.is_monomial():
            return series.shift(r.den.deg())
        return series.div_poly(r.den, cap=prec)

    # inspection

    def is_zero(self) -> bool:
        """No known nonzero coefficient (the series may still be nonzero beyond prec)"""
        return len(self.coeffs) == 0

    def is_exact(self) -> bool:
        return self.prec is None

    def valuation(self) -> Valuation:
        if len(self.coeffs):
            return self.start
        if self.prec is None:
            return POS_INF
        raise PrecisionError(f"valuation is not determined below the working precision u^{self.prec}")

    def lower_bound(self) -> float:
        """Guaranteed lower bound on the valuation"""
        if len(self.coeffs):
            return float(self.start)
        return math.inf if self.prec is None else float(self.prec)

    def end(self) -> int:
        """One past the last stored exponent"""
        return self.start + len(self.coeffs)

    def coefficient(self, k: int) -> int:
        if self.prec is not None and k >= self.prec:
            raise PrecisionError(f"coefficient of u^{k} is beyond the precision u^{self.prec}")
        i = k - self.start
        if 0 <= i < len(self.coeffs):
            return int(self.coeffs[i])
        return 0

    def terms(self) -> dict[int, int]:
        return {self.start + int(i): int(self.coeffs[i]) for i in np.flatnonzero(self.coeffs)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.ctx is other.ctx
            and self.prec == other.prec
            and self.start == other.start
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.start, self.prec, self.coeffs.tobytes()))

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equal on every coefficient both series know"""
        return (self - other).is_zero()

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*u^{k}" for k, c in sorted(self.terms().items())[:6])
        tail = f" + O(u^{self.prec})" if self.prec is not None else ""
        return f"LaurentSeries({terms or '0'}{tail})"

    # arithmetic

    def truncate(self, prec: int | None) -> "LaurentSeries":
        if prec is None:
            return self
        new_prec = prec if self.prec is None else min(prec, self.prec)
        return LaurentSeries(self.ctx, self.start, self.coeffs, new_prec)

    def _aligned(self, other: "LaurentSeries", prec: int | None) -> tuple[int, np.ndarray, np.ndarray]:
        starts = [s.start for s in (self, other) if len(s.coeffs)]
        start = min(starts)
        end = max(s.end() for s in (self, other) if len(s.coeffs))
        if prec is not None:
            end = min(end, prec)
        length = max(end - start, 0)
        a = np.zeros(length, dtype=np.int64)
        b = np.zeros(length, dtype=np.int64)
        for series, target in ((self, a), (other, b)):
            if len(series.coeffs):
                lo = series.start - start
                hi = min(lo + len(series.coeffs), length)
                if hi > lo:
                    target[lo:hi] = series.coeffs[: hi - lo]
        return start, a, b

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        prec = _min_prec(self.prec, other.prec)
        if not len(other.coeffs):
            return self.truncate(prec)
        if not len(self.coeffs):
            return other.truncate(prec)
        start, a, b = self._aligned(other, prec)
        return LaurentSeries(self.ctx, start, self.ctx.add_array[a, b], prec)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.ctx, self.start, self.ctx.neg_array[self.coeffs], self.prec)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, c: int) -> "LaurentSeries":
        c %= self.ctx.q
        if c == 1:
            return self
        return LaurentSeries(self.ctx, self.start, self.ctx.mul_array[c][self.coeffs], self.prec)

    def shift(self, k: int) -> "LaurentSeries":
        """self * u^k"""
        prec = None if self.prec is None else self.prec + k
        return LaurentSeries(self.ctx, self.start + k, self.coeffs, prec)

    def mul(self, other: "LaurentSeries", cap: int | None = None) -> "LaurentSeries":
        v1, v2 = self.lower_bound(), other.lower_bound()
        bounds: list[float] = []
        if self.prec is not None:
            bounds.append(self.prec + v2)
        if other.prec is not None:
            bounds.append(other.prec + v1)
        if cap is not None:
            bounds.append(cap)
        finite = [b for b in bounds if b != math.inf]
        prec = int(min(finite)) if finite else None
        if not len(self.coeffs) or not len(other.coeffs):
            return LaurentSeries.zero(self.ctx, prec)
        a, b = self.coeffs, other.coeffs
        if prec is not None:
            a = a[: max(prec - other.start - self.start, 0)]
            b = b[: max(prec - self.start - other.start, 0)]
            if not len(a) or not len(b):
                return LaurentSeries.zero(self.ctx, prec)
        return LaurentSeries(self.ctx, self.start + other.start, self.ctx.convolve(a, b), prec)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self.mul(other)

    def mul_poly(self, f: FqPoly, cap: int | None = None) -> "LaurentSeries":
        """self * f(T) for an exact polynomial f"""
        if f.is_zero() or len(f) > 8:
            return self.mul(LaurentSeries.from_poly(self.ctx, f), cap)
        # few terms: sum of shifted scalar multiples
        top = f.deg()
        prec = _min_prec(None if self.prec is None else self.prec - top, cap)
        if not len(self.coeffs):
            return LaurentSeries.zero(self.ctx, prec)
        ctx = self.ctx
        start = self.start - top
        end = self.end() - f.t_order()
        if prec is not None:
            end = min(end, prec)
        length = max(end - start, 0)
        acc = np.zeros(length, dtype=np.int64)
        for deg, c in f:
            lo = top - deg
            hi = min(lo + len(self.coeffs), length)
            if hi > lo:
                part = ctx.mul_array[c][self.coeffs[: hi - lo]]
                acc[lo:hi] = ctx.add_array[acc[lo:hi], part]
        return LaurentSeries(ctx, start, acc, prec)

    def div_poly(self, f: FqPoly, cap: int | None = None) -> "LaurentSeries":
        """self / f(T), solving the division recurrence term by term"""
        if f.is_zero():
            raise ZeroDivisionError("series division by the zero polynomial")
        ctx = self.ctx
        top = f.deg()
        z = self.scale(ctx.inv(f.leading_coeff())).shift(top)
        if f.is_monomial():
            return z.truncate(cap)
        prec = _min_prec(z.prec, cap)
        if prec is None:
            raise PreconditionError(f"dividing an exact series by {f} needs a precision cap")
        if not len(z.coeffs):
            return LaurentSeries.zero(ctx, prec)
        # f = c u^-top (1 + sum_j h_j u^j)
        lead_inv = ctx.inv(f.leading_coeff())
        h = [(top - deg, ctx.mul(c, lead_inv)) for deg, c in f if deg != top]
        start = z.start
        length = max(prec - start, 0)
        block = min(j for j, _ in h)
        if block >= VECTOR_BLOCK:
            return LaurentSeries(ctx, start, self._solve_blocks(z, h, length, block), prec)
        z_list = z.coeffs[:length].tolist()
        z_list += [0] * (length - len(z_list))
        y = [0] * length
        add, mul, neg = ctx.add_table, ctx.mul_table, ctx.neg_table
        for k in range(length):
            acc = z_list[k]
            for j, hj in h:
                if j <= k:
                    prev = y[k - j]
                    if prev:
                        acc = add[acc][neg[mul[hj][prev]]]
            y[k] = acc
        return LaurentSeries(ctx, start, np.array(y, dtype=np.int64), prec)

    def _solve_blocks(self, z: "LaurentSeries", h: list[tuple[int, int]], length: int, block: int) -> np.ndarray:
        """y_k = z_k - sum h_j y_(k-j), a whole block at a time; every shift j is at least block"""
        ctx = self.ctx
        y = np.zeros(length, dtype=np.int64)
        y[: min(len(z.coeffs), length)] = z.coeffs[:length]
        for lo in range(block, length, block):
            hi = min(lo + block, length)
            acc = y[lo:hi]
            for j, hj in h:
                src_hi = hi - j
                if src_hi <= 0:
                    continue
                src_lo = max(lo - j, 0)
                part = ctx.neg_array[ctx.mul_array[hj][y[src_lo:src_hi]]]
                offset = src_lo - (lo - j)
                acc[offset:] = ctx.add_array[acc[offset:], part]
        return y

    def frobenius(self, k: int = 1, cap: int | None = None) -> "LaurentSeries":
        """self^(q^k): exponents and precision scale by q^k, F_q coefficients are fixed"""
        if k == 0:
            return self.truncate(cap)
        factor = self.ctx.q**k
        prec = None if self.prec is None else self.prec * factor
        prec = _min_prec(prec, cap)
        if not len(self.coeffs):
            return LaurentSeries.zero(self.ctx, prec)
        coeffs = self.coeffs
        if prec is not None:
            keep = max(-(-(prec - self.start * factor) // factor), 0)
            coeffs = coeffs[:keep]
        if not len(coeffs):
            return LaurentSeries.zero(self.ctx, prec)
        spread = np.zeros((len(coeffs) - 1) * factor + 1, dtype=np.int64)
        spread[::factor] = coeffs
        return LaurentSeries(self.ctx, self.start * factor, spread, prec)

    def power(self, k: int, cap: int | None = None) -> "LaurentSeries":
        """self^k for k >= 0 by square and multiply, each product truncated at cap"""
        if k < 0:
            raise ValueError("negative power of a series")
        result = LaurentSeries.monomial(self.ctx, 0)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, cap)
            k >>= 1
            if k:
                base = base.mul(base, cap)
        return result
