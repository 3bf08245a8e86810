"""Disk cache of computed mu_n, gamma_n, p_n and b_n as versioned JSON files"""

import json
import os
import tempfile
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

from algebra.field_context import FieldContext
from lib.errors import DrinfeldSsError
from lib.log.log_level import LogLevel
from lib.log.logger import Logger
from lib.parser import PolynomialParser, series_pairs
from series.series_poly import SeriesPoly
from supersingular.j_poly import JPoly
from supersingular.mu_gamma import expected_degree

CACHE_FORMAT_VERSION = 1
# kind -> indeterminate
KINDS = {"mu": "j", "gamma": "j", "pn": "x", "bn": "D"}

Poly = TypeVar("Poly", bound=SeriesPoly)


class CacheCorruption(ValueError):
    pass


class PolynomialCache:
    """Files keyed by (q, n, kind); a file is trusted only after its invariants are checked"""

    def __init__(self, logger: Logger, directory: str | Path, enabled: bool = True) -> None:
        self.logger = logger
        self.directory = Path(directory)
        self.enabled = enabled

    def path_for(self, ctx: FieldContext, n: int, kind: str) -> Path:
        return self.directory / f"{kind}-p{ctx.p}-e{ctx.e}-n{n}.json"

    def store(self, ctx: FieldContext, n: int, kind: str, poly: SeriesPoly) -> Path:
        """Write through a temporary file in the same directory and rename it into place"""
        path = self.path_for(ctx, n, kind)
        document = {
            "format": CACHE_FORMAT_VERSION,
            "p": ctx.p,
            "e": ctx.e,
            "n": n,
            "kind": kind,
            "var": poly.var,
            "terms": series_pairs(poly),
        }
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=self.directory)
        try:
            with os.fdopen(fd, "w") as f:
                json.dump(document, f, indent=2)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
        return path

    def load(self, ctx: FieldContext, n: int, kind: str) -> SeriesPoly | None:
        """None on a miss; a corrupt or outdated file is reported and treated as a miss"""
        path = self.path_for(ctx, n, kind)
        if not path.is_file():
            return None
        try:
            with open(path) as f:
                document = json.load(f)
            return self._validate(ctx, n, kind, document)
        except (OSError, ValueError, DrinfeldSsError) as e:
            self.logger.log(LogLevel.WARNING, f"Ignoring cache file {path}: {e}; recomputing")
            return None

    def _validate(self, ctx: FieldContext, n: int, kind: str, document: Any) -> SeriesPoly:
        if not isinstance(document, dict):
            raise CacheCorruption("not a JSON object")
        if document.get("format") != CACHE_FORMAT_VERSION:
            raise CacheCorruption(f"format {document.get('format')!r} != {CACHE_FORMAT_VERSION}")
        header = (document.get("p"), document.get("e"), document.get("n"), document.get("kind"))
        if header != (ctx.p, ctx.e, n, kind):
            raise CacheCorruption(f"header {header} does not match {(ctx.p, ctx.e, n, kind)}")
        terms = document.get("terms")
        if not isinstance(terms, list):
            raise CacheCorruption("terms is not a list")
        parser = PolynomialParser(ctx)
        poly = parser.parse_series_pairs(terms, KINDS[kind])
        if poly.is_zero() or not poly.leading_coeff().is_one():
            raise CacheCorruption(f"{kind}_{n} is not monic")
        if kind in ("mu", "gamma"):
            if not all(c.is_integral() for _, c in poly):
                raise CacheCorruption(f"{kind}_{n} has a coefficient outside A")
            if poly.degree() != expected_degree(ctx.q, n):
                raise CacheCorruption(f"deg {kind}_{n} = {poly.degree()}, expected {expected_degree(ctx.q, n)}")
            return JPoly.of(ctx, {exp: c.as_poly() for exp, c in poly})
        if not all(c.has_t_power_denominator() for _, c in poly):
            raise CacheCorruption(f"{kind}_{n} has a denominator other than a power of T")
        if len(poly) != 2**n:
            raise CacheCorruption(f"{kind}_{n} has {len(poly)} terms, expected {2**n}")
        return poly

    def get_or_compute(self, ctx: FieldContext, n: int, kind: str, compute: Callable[[], Poly]) -> Poly:
        if not self.enabled:
            return compute()
        cached = self.load(ctx, n, kind)
        if cached is not None:
            self.logger.log(LogLevel.DEBUG, f"Cache hit for {kind}_{n} over F_{ctx.q}")
            return cached  # type: ignore[return-value]
        self.logger.log(LogLevel.DEBUG, f"Cache miss for {kind}_{n} over F_{ctx.q}")
        value = compute()
        try:
            self.store(ctx, n, kind, value)
        except OSError as e:
            self.logger.log(LogLevel.WARNING, f"Could not write the cache entry for {kind}_{n}: {e}")
        return value
