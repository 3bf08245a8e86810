"""Canonical text form of polynomials over F_q and the grammar reading it back

    expr   := term (("+" | "-") term)*
    term   := ["-"] factor (("*" | "/") factor)*
    factor := atom ["^" ["-"] integer]
    atom   := integer | "u" | "T" | VAR | "(" expr ")"

Integers are read mod p, u is the class of the indeterminate of the modulus of F_q
(q = p^e with e > 1), T is the variable of A = F_q[T] and VAR the indeterminate of a
polynomial with coefficients in K (x, D or j). Printing is canonical: terms in decreasing
degree, nonnegative representatives, no spaces, so that text equality is value equality.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import pyparsing as pp

from algebra.field_context import FieldContext
from algebra.fq_poly import FqPoly
from algebra.rat_func import RatFunc
from lib.errors import ParseError
from series.series_poly import SeriesPoly
from skew.skew_poly import SkewPoly
from supersingular.j_poly import JPoly

# polynomial in VAR, exponent -> coefficient in K
Expansion = dict[int, RatFunc]


def format_fq(ctx: FieldContext, c: int) -> str:
    """An element of F_q as an integer (prime field) or a polynomial in u"""
    if ctx.e == 1:
        return str(c)
    if c == 0:
        return "0"
    parts = []
    for k, digit in reversed(list(enumerate(ctx.coords(c)))):
        if digit == 0:
            continue
        if k == 0:
            parts.append(str(digit))
            continue
        mono = "u" if k == 1 else f"u^{k}"
        parts.append(mono if digit == 1 else f"{digit}*{mono}")
    return "+".join(parts)


def _wrap(text: str) -> str:
    return f"({text})" if "+" in text or "/" in text else text


def _term(coeff_text: str, mono: str, coeff_is_one: bool) -> str:
    if coeff_is_one:
        return mono
    return f"{_wrap(coeff_text)}*{mono}"


def _mono(var: str, exp: int) -> str:
    return var if exp == 1 else f"{var}^{exp}"


def format_poly(f: FqPoly, var: str = "T") -> str:
    if f.is_zero():
        return "0"
    parts = []
    for deg, c in f.items_desc():
        text = format_fq(f.ctx, c)
        if deg == 0:
            parts.append(_wrap(text) if len(f) > 1 else text)
        else:
            parts.append(_term(text, _mono(var, deg), c == 1))
    return "+".join(parts)


def format_ratfunc(r: RatFunc) -> str:
    """num, c*T^k for Laurent monomials, and (num)/(den) otherwise"""
    if r.den.is_one():
        return format_poly(r.num)
    if r.is_laurent_monomial():
        k = r.num.deg() - r.den.deg()
        c = r.num.leading_coeff()
        return _term(format_fq(r.ctx, c), _mono("T", k), c == 1)
    num = format_poly(r.num)
    den = format_poly(r.den)
    return f"{_wrap(num)}/{_wrap(den)}"


def format_coefficient(c: Any) -> str:
    if isinstance(c, FqPoly):
        return format_poly(c)
    if isinstance(c, RatFunc):
        return format_ratfunc(c)
    return str(c)


def format_series(f: SeriesPoly) -> str:
    """Terms in decreasing powers of the indeterminate, e.g. x^3+T^-1*x^2+x+1"""
    if f.is_zero():
        return "0"
    parts = []
    for exp, c in f.items_desc():
        text = format_coefficient(c)
        if exp == 0:
            parts.append(_wrap(text) if len(f) > 1 else text)
        else:
            parts.append(_term(text, _mono(f.var, exp), c.is_one()))
    return "+".join(parts)


def series_pairs(f: SeriesPoly) -> list[list[Any]]:
    """[[exponent, coefficient text], ...] in decreasing exponent order"""
    return [[exp, format_coefficient(c)] for exp, c in f.items_desc()]


def format_series_pairs(f: SeriesPoly) -> str:
    """Sparse form, e.g. 3:1 2:T^-1 1:1 0:1"""
    return " ".join(f"{exp}:{text}" for exp, text in series_pairs(f))


def format_skew(f: SkewPoly, var: str = "t") -> str:
    """c_d*t^d + ... + c_0 in decreasing tau-degree"""
    if f.is_zero():
        return "0"
    field = f.field
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if field.is_zero(c):
            continue
        text = field.format(c)
        if i == 0:
            parts.append(text)
        else:
            parts.append(_term(text, _mono(var, i), c == field.one()))
    return " + ".join(parts)


@dataclass(frozen=True)
class _Node:
    op: str
    args: tuple[Any, ...]


def _fold(tokens: pp.ParseResults, ops: dict[str, str]) -> _Node:
    node = tokens[0]
    for i in range(1, len(tokens), 2):
        node = _Node(ops[tokens[i]], (node, tokens[i + 1]))
    return node


def _factor_action(tokens: pp.ParseResults) -> _Node:
    if len(tokens) == 1:
        return tokens[0]
    return _Node("pow", (tokens[0], int(tokens[1])))


def _term_action(tokens: pp.ParseResults) -> _Node:
    if tokens[0] == "-":
        return _Node("neg", (_fold(tokens[1:], {"*": "mul", "/": "div"}),))
    return _fold(tokens, {"*": "mul", "/": "div"})


@lru_cache(maxsize=None)
def _grammar(var: str | None) -> pp.ParserElement:
    integer = pp.Word(pp.nums).set_parse_action(lambda t: _Node("int", (int(t[0]),)))
    names = ["T", "u"] + ([var] if var else [])
    symbol = pp.one_of(names).set_parse_action(lambda t: _Node("sym", (t[0],)))
    expr = pp.Forward()
    atom = integer | symbol | (pp.Suppress("(") + expr + pp.Suppress(")"))
    exponent = pp.Combine(pp.Optional("-") + pp.Word(pp.nums))
    factor = (atom + pp.Optional(pp.Suppress("^") + exponent)).set_parse_action(_factor_action)
    term = (pp.Optional("-") + factor + pp.ZeroOrMore(pp.one_of("* /") + factor)).set_parse_action(_term_action)
    expr <<= (term + pp.ZeroOrMore(pp.one_of("+ -") + term)).set_parse_action(
        lambda t: _fold(t, {"+": "add", "-": "sub"})
    )
    return expr


class PolynomialParser:
    """Reads the canonical text form back into FqPoly, RatFunc, SeriesPoly and JPoly values"""

    def __init__(self, ctx: FieldContext) -> None:
        self.ctx = ctx

    def _parse(self, text: str, var: str | None) -> Expansion:
        if not text or not text.strip():
            raise ParseError("empty polynomial text")
        try:
            tree = _grammar(var).parse_string(text.replace(" ", ""), parse_all=True)[0]
        except pp.ParseException as e:
            raise ParseError(f"cannot parse {text!r}: {e}") from e
        return self._evaluate(tree, text)

    def _constant(self, r: RatFunc) -> Expansion:
        return {} if r.is_zero() else {0: r}

    def _evaluate(self, node: _Node, text: str) -> Expansion:
        ctx = self.ctx
        op = node.op
        if op == "int":
            return self._constant(RatFunc.constant(ctx, ctx.from_int(node.args[0])))
        if op == "sym":
            name = node.args[0]
            if name == "T":
                return {0: RatFunc.T(ctx)}
            if name == "u":
                if ctx.e == 1:
                    raise ParseError(f"u is undefined over the prime field F_{ctx.q} in {text!r}")
                return {0: RatFunc.constant(ctx, ctx.generator())}
            return {1: RatFunc.one(ctx)}
        values = [self._evaluate(arg, text) if isinstance(arg, _Node) else arg for arg in node.args]
        if op == "neg":
            return {e: -c for e, c in values[0].items()}
        if op == "add":
            return _add(values[0], values[1])
        if op == "sub":
            return _add(values[0], {e: -c for e, c in values[1].items()})
        if op == "mul":
            return _mul(values[0], values[1])
        if op == "div":
            return _mul(values[0], {0: self._scalar(values[1], text, "divide by").inverse()})
        if op == "pow":
            return self._power(values[0], values[1], text)
        raise ParseError(f"unknown operation {op} in {text!r}")

    def _scalar(self, value: Expansion, text: str, action: str) -> RatFunc:
        if any(e != 0 for e in value):
            raise ParseError(f"cannot {action} a polynomial in the indeterminate in {text!r}")
        if not value:
            raise ParseError(f"cannot {action} zero in {text!r}")
        return value[0]

    def _power(self, base: Expansion, k: int, text: str) -> Expansion:
        if k < 0:
            return {0: self._scalar(base, text, "invert") ** k}
        if len(base) == 1:
            ((e, c),) = base.items()
            return {e * k: c**k}
        result: Expansion = {0: RatFunc.one(self.ctx)}
        for _ in range(k):
            result = _mul(result, base)
        return result

    def parse_ratfunc(self, text: str) -> RatFunc:
        value = self._parse(text, None)
        return value[0] if value else RatFunc.zero(self.ctx)

    def parse_poly(self, text: str) -> FqPoly:
        value = self.parse_ratfunc(text)
        if not value.is_integral():
            raise ParseError(f"{text!r} is not a polynomial in T")
        return value.as_poly()

    def parse_series(self, text: str, var: str) -> SeriesPoly:
        value = self._parse(text, var)
        if any(e < 0 for e in value):
            raise ParseError(f"negative power of {var} in {text!r}")
        return SeriesPoly(self.ctx, var, value)

    def parse_jpoly(self, text: str) -> JPoly:
        value = self._parse(text, "j")
        terms = {}
        for exp, c in value.items():
            if exp < 0 or not c.is_integral():
                raise ParseError(f"{text!r} is not a polynomial in j over A")
            terms[exp] = c.as_poly()
        return JPoly.of(self.ctx, terms)

    def parse_series_pairs(self, pairs: str | list[list[Any]], var: str) -> SeriesPoly:
        """Accepts the sparse text form or its JSON mirror"""
        if isinstance(pairs, str):
            pairs = [_split_pair(item) for item in pairs.split()]
        terms = {}
        for pair in pairs:
            if len(pair) != 2 or not isinstance(pair[0], int):
                raise ParseError(f"malformed exponent:coefficient pair {pair!r}")
            terms[pair[0]] = self.parse_ratfunc(str(pair[1]))
        return SeriesPoly(self.ctx, var, terms)


def _add(a: Expansion, b: Expansion) -> Expansion:
    result = dict(a)
    for e, c in b.items():
        total = result[e] + c if e in result else c
        if total.is_zero():
            result.pop(e, None)
        else:
            result[e] = total
    return result


def _mul(a: Expansion, b: Expansion) -> Expansion:
    result: Expansion = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            result = _add(result, {ea + eb: ca * cb})
    return result


def _split_pair(item: str) -> list[Any]:
    exp, sep, coeff = item.partition(":")
    if not sep or not exp.isdigit():
        raise ParseError(f"malformed exponent:coefficient pair {item!r}")
    return [int(exp), coeff]


def format_kummer(coeffs: Sequence[RatFunc | None], var: str = "c") -> str:
    """sum k_i*c^i in decreasing powers of c, exact coefficients only"""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        k = coeffs[i]
        if k is None or k.is_zero():
            continue
        text = format_ratfunc(k)
        parts.append(text if i == 0 else _term(text, _mono(var, i), k.is_one()))
    return "+".join(parts) or "0"


def format_q(ctx: FieldContext) -> str:
    return str(ctx.p) if ctx.e == 1 else f"{ctx.p}^{ctx.e}"
