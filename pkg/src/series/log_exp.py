"""Coefficients of the logarithm and exponential of a rank-2 module over K.

log(z) = sum beta_n z^(q^n), exp(z) = sum alpha_n z^(q^n), with

    -[n] beta_n = g^(q^(n-1)) beta_(n-1) + Delta^(q^(n-2)) beta_(n-2)
     [n] alpha_n = g alpha_(n-1)^q + Delta alpha_(n-2)^(q^2)

and beta_0 = alpha_0 = 1.
"""

from algebra.brackets import bracket
from algebra.field_context import FieldContext
from algebra.fields import FunctionField
from algebra.fq_poly import FqPoly
from algebra.rat_func import RatFunc
from drinfeld.drinfeld_module import DrinfeldModule, in_f_delta
from lib.errors import PreconditionError


def _require_over_k(dm: DrinfeldModule) -> FieldContext:
    if not (dm.a_map.is_generic() and isinstance(dm.field, FunctionField)):
        raise PreconditionError("log and exp coefficients are computed for modules over K")
    return dm.field.ctx


def log_exp_coeffs(dm: DrinfeldModule, n_max: int) -> tuple[list[RatFunc], list[RatFunc]]:
    """(beta_0..beta_N, alpha_0..alpha_N)"""
    ctx = _require_over_k(dm)
    if n_max < 0:
        raise PreconditionError(f"number of coefficients needs N >= 0, got {n_max}")
    g, delta = dm.g, dm.delta
    one = RatFunc.one(ctx)
    betas, alphas = [one], [one]
    for n in range(1, n_max + 1):
        b = bracket(ctx, n)
        beta = g.frobenius(n - 1) * betas[n - 1]
        alpha = g * alphas[n - 1].frobenius(1)
        if n >= 2:
            beta = beta + delta.frobenius(n - 2) * betas[n - 2]
            alpha = alpha + delta * alphas[n - 2].frobenius(2)
        betas.append(-beta / b)
        alphas.append(alpha / b)
    return betas, alphas


def log_exp_numerators(dm: DrinfeldModule, n_max: int) -> tuple[list[FqPoly], list[FqPoly]]:
    """(B_n = L_n beta_n, A_n = D_n alpha_n) for integral g and Delta, without any division"""
    ctx = _require_over_k(dm)
    if not (dm.g.is_integral() and dm.delta.is_integral()):
        raise PreconditionError("integral numerators need g and Delta in A")
    g, delta = dm.g.as_poly(), dm.delta.as_poly()
    one = FqPoly.one(ctx)
    big_b, big_a = [one], [one]
    for n in range(1, n_max + 1):
        b_n = g.frobenius(n - 1) * big_b[n - 1]
        a_n = g * big_a[n - 1].frobenius(1)
        if n >= 2:
            previous = bracket(ctx, n - 1)
            b_n = b_n + delta.frobenius(n - 2) * previous * big_b[n - 2]
            a_n = a_n + delta * previous.frobenius(1) * big_a[n - 2].frobenius(2)
        big_b.append(-b_n)
        big_a.append(a_n)
    return big_b, big_a


def an_recursive(ctx: FieldContext, delta: RatFunc, n_max: int) -> list[RatFunc]:
    """a_0..a_N of the Legendre module with parameter Delta, from

    -[n] a_n = -a_(n-1) (T^(q^n) + Delta^(q^(n-1))) + Delta^(q^(n-1)) a_(n-2), a_-1 = 0, a_0 = T.
    """
    if n_max < 0:
        raise PreconditionError(f"number of coefficients needs N >= 0, got {n_max}")
    t = RatFunc.T(ctx)
    values = [t]
    previous = RatFunc.zero(ctx)
    for n in range(1, n_max + 1):
        d_power = delta.frobenius(n - 1)
        t_power = RatFunc.t_power(ctx, ctx.q**n)
        rhs = -values[-1] * (t_power + d_power) + d_power * previous
        previous = values[-1]
        values.append(-rhs / bracket(ctx, n))
    return values


def composition_residuals(betas: list[RatFunc], alphas: list[RatFunc]) -> list[RatFunc]:
    """Coefficients of z^(q^n) in log(exp(z)) - z, n = 0..N"""
    residuals = []
    for n in range(min(len(betas), len(alphas))):
        total = RatFunc.zero(betas[0].ctx)
        for i in range(n + 1):
            total = total + betas[i] * alphas[n - i].frobenius(i)
        residuals.append(total - 1 if n == 0 else total)
    return residuals


def functional_equation_residuals(
    dm: DrinfeldModule, betas: list[RatFunc], alphas: list[RatFunc]
) -> tuple[list[RatFunc], list[RatFunc]]:
    """Coefficients of z^(q^n) in log(phi_T(z)) - T log(z) and exp(T z) - phi_T(exp(z))"""
    ctx = _require_over_k(dm)
    t = RatFunc.T(ctx)
    g, delta = dm.g, dm.delta
    log_side, exp_side = [], []
    for n in range(min(len(betas), len(alphas))):
        t_qn = RatFunc.t_power(ctx, ctx.q**n)
        lhs = betas[n] * t_qn - t * betas[n]
        rhs = t_qn * alphas[n] - t * alphas[n]
        if n >= 1:
            lhs = lhs + betas[n - 1] * g.frobenius(n - 1)
            rhs = rhs - g * alphas[n - 1].frobenius(1)
        if n >= 2:
            lhs = lhs + betas[n - 2] * delta.frobenius(n - 2)
            rhs = rhs - delta * alphas[n - 2].frobenius(2)
        log_side.append(lhs)
        exp_side.append(rhs)
    return log_side, exp_side


def a_delta_series(dm: DrinfeldModule, delta: RatFunc, n_max: int) -> list[RatFunc]:
    """a_delta(n) = T sum_(j <= n) beta_j delta^(q^j), n = 0..N, for a module with phi_T(delta) = 0"""
    ctx = _require_over_k(dm)
    if not in_f_delta(dm, delta):
        raise PreconditionError(f"delta = {delta} is not a root of phi_T, the module is not in F_delta")
    betas, _ = log_exp_coeffs(dm, n_max)
    t = RatFunc.T(ctx)
    values = []
    partial = RatFunc.zero(ctx)
    for j, beta in enumerate(betas):
        partial = partial + beta * delta.frobenius(j)
        values.append(t * partial)
    return values
