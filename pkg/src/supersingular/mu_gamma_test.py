"""Unit tests for mu_n and gamma_n"""

import pytest

from algebra.field_context import make_context
from algebra.fq_poly import FqPoly
from lib.errors import PreconditionError
from supersingular.j_poly import JPoly
from supersingular.mu_gamma import Kind, expected_degree, mu_gamma


class TestMuGamma:
    """Sums over P_2(n)"""

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("kind", list(Kind))
    def test_first(self, p: int, kind: Kind) -> None:
        """mu_1 = gamma_1 = 1"""
        ctx = make_context(p)
        assert mu_gamma(ctx, 1, kind) == JPoly.one(ctx)

    @pytest.mark.parametrize("p", [2, 3])
    def test_second(self, p: int) -> None:
        """mu_2 = j + T^(q^2) - T^q and gamma_2 = j - T^q + T"""
        ctx = make_context(p)
        q, one = ctx.q, FqPoly.one(ctx)
        t = FqPoly.T(ctx)
        assert mu_gamma(ctx, 2, Kind.MU) == JPoly.of(ctx, {1: one, 0: t ** (q * q) - t**q})
        assert mu_gamma(ctx, 2, Kind.GAMMA) == JPoly.of(ctx, {1: one, 0: t - t**q})

    def test_text(self) -> None:
        """Canonical form over F_2"""
        assert str(mu_gamma(make_context(2), 2, Kind.MU)) == "j+(T^4+T^2)"

    @pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4)])
    @pytest.mark.parametrize("kind", list(Kind))
    def test_monic_of_expected_degree(self, p: int, n: int, kind: Kind) -> None:
        """Monic in j of degree (q^n - 1)/(q^2 - 1) or (q^n - q)/(q^2 - 1)"""
        poly = mu_gamma(make_context(p), n, kind)
        assert poly.is_monic()
        assert poly.degree() == expected_degree(p, n)

    @pytest.mark.parametrize("q,n,degree", [(2, 2, 1), (2, 3, 2), (3, 2, 1), (3, 3, 3), (2, 4, 5), (2, 1, 0)])
    def test_expected_degree(self, q: int, n: int, degree: int) -> None:
        """Even and odd n"""
        assert expected_degree(q, n) == degree

    def test_n_zero(self) -> None:
        """n >= 1"""
        with pytest.raises(PreconditionError):
            mu_gamma(make_context(2), 0, Kind.MU)
