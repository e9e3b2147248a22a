"""Integral and series identities linking the quarter period to zeta_hat(M, 1).

The chain verified here is

    integral_0^1 dx / sqrt(1 - x^2)
        = sum_k (2k-1)!!/(2k)!! / (2k+1)                    (binomial series)
        = (1/A) integral_0^{pi/2} atanh(cos x)/cos x dx     (Wallis, A = 2 zeta(M,1))
        = (2/A) integral_0^1 (-ln u) / (1 - u^2) du         (u = tan(x/2))
        = (2/A) sum_k 1/(2k+1)^2
        = zeta_hat(M, 1)
        = pi/2.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import config
from .checks import (
    EXTRAPOLATED,
    PARTIAL_SUM,
    QUADRATURE,
    RECURRENCE,
    IdentityCheck,
    SeriesEstimate,
    exact,
    pairwise,
)
from .field_arith import InvalidInputError
from .lseries import odd_power_sum_direct, zeta_accelerated, zeta_hat_closed_form
from .quadrature import QuadratureResult, integrate, tanh_sinh


class DomainError(ValueError):
    pass


def double_factorial(n: int) -> int:
    if n < -1:
        raise InvalidInputError("double factorial defined for n >= -1")
    return math.prod(range(n, 0, -2))


def double_factorial_ratio(k: int, exact_mode: bool = False) -> float | Fraction:
    """(2k-1)!!/(2k)!! built by the recurrence r_k = r_{k-1} (2k-1)/(2k), r_0 = 1."""
    if k < 0:
        raise InvalidInputError("k must be >= 0")
    r = Fraction(1) if exact_mode else 1.0
    for j in range(1, k + 1):
        r = r * Fraction(2 * j - 1, 2 * j) if exact_mode else r * (2 * j - 1) / (2 * j)
    return r


def double_factorial_ratios(count: int) -> np.ndarray:
    """r_0, ..., r_{count-1} as floats (running product, never materializing n!!)."""
    j = np.arange(1, count, dtype=float)
    return np.concatenate(([1.0], np.cumprod((2 * j - 1) / (2 * j))))


# -- Wallis integrals -----------------------------------------------------


def wallis(n: int) -> float:
    """integral_0^{pi/2} cos^n x dx for even n, from I_0 = pi/2 and I_n = (n-1)/n I_{n-2}."""
    if n < 0 or n % 2:
        raise InvalidInputError("only even n >= 0 are supported")
    value = 0.5 * math.pi
    for m in range(2, n + 1, 2):
        value *= (m - 1) / m
    return value


def wallis_quadrature(n: int, tol: float = 1e-12) -> QuadratureResult:
    return integrate(lambda x: math.cos(x) ** n, 0.0, 0.5 * math.pi, tol=tol)


def wallis_closed_form_check(k: int, tol: float = config.CLOSED_FORM_TOL) -> list[IdentityCheck]:
    """Recurrence, quadrature and r_k * A (A = 2 zeta(M, 1)) agree for the 2k-th power."""
    A = 2.0 * zeta_accelerated(1.0).value
    q = wallis_quadrature(2 * k)
    legs = {
        "recurrence": SeriesEstimate(wallis(2 * k), None, RECURRENCE, 2 * k),
        "quadrature": SeriesEstimate(q.value, None, QUADRATURE, q.evaluations, q.abs_error_estimate),
        "ratio_times_A": exact(double_factorial_ratio(k) * A),
    }
    return pairwise(f"analysis.wallis[k={k}]", legs, {}, tol)


def cos_squared_check(tol: float = config.CLOSED_FORM_TOL) -> list[IdentityCheck]:
    """integral_0^{pi/2} cos^2 = pi/4 = integral_0^1 du/(1+u^2) = sum (-1)^k/(2k+1)."""
    q1 = wallis_quadrature(2)
    q2 = integrate(lambda u: 1.0 / (1.0 + u * u), 0.0, 1.0, tol=1e-14)
    legs = {
        "cos2_quadrature": SeriesEstimate(q1.value, None, QUADRATURE, q1.evaluations, q1.abs_error_estimate),
        "arctan_quadrature": SeriesEstimate(q2.value, None, QUADRATURE, q2.evaluations, q2.abs_error_estimate),
        "alternating_sum": zeta_accelerated(1.0),
    }
    return pairwise("analysis.cos_squared=pi/4", legs, {}, tol)


# -- logarithmic series and kernel ---------------------------------------


def log_series(t: float, terms: int) -> float:
    """sum_{k<terms} t^(2k)/(2k+1)."""
    k = np.arange(terms)
    return math.fsum(t ** (2 * k) / (2 * k + 1))


def log_closed_form(t: float) -> float:
    """(1/(2t)) ln((1+t)/(1-t)), with the limit 1 at t = 0."""
    if abs(t) >= 1:
        raise DomainError("need |t| < 1")
    if t == 0:
        return 1.0
    return (math.log1p(t) - math.log1p(-t)) / (2.0 * t)


def log_series_closed_form_check(t: float, tol: float = config.CLOSED_FORM_TOL) -> IdentityCheck:
    if not 0 < abs(t) < 1:
        raise DomainError("need 0 < |t| < 1")
    # smallest K with t^(2K) < tol/10
    terms = max(1, math.ceil(math.log(tol / 10) / (2 * math.log(abs(t)))))
    lhs = SeriesEstimate(log_series(t, terms), None, PARTIAL_SUM, terms, abs(t) ** (2 * terms))
    return IdentityCheck(f"analysis.log_series[t={t}]", lhs, exact(log_closed_form(t)), tol)


def log_kernel_integral(k: int, tol: float = 1e-14) -> QuadratureResult:
    """integral_0^1 (-ln u) u^(2k) du by tanh-sinh; equals 1/(2k+1)^2."""
    if k < 0:
        raise InvalidInputError("k must be >= 0")
    return tanh_sinh(lambda u: -np.log(u) * u ** (2 * k), 0.0, 1.0, tol=tol)


def log_kernel_check(k: int, tol: float = config.CLOSED_FORM_TOL) -> IdentityCheck:
    q = log_kernel_integral(k)
    lhs = SeriesEstimate(q.value, None, QUADRATURE, q.evaluations, q.abs_error_estimate)
    return IdentityCheck(f"analysis.log_kernel[k={k}]", lhs, exact(1.0 / (2 * k + 1) ** 2), tol)


# -- the binomial series S -----------------------------------------------


def series_S(terms: int) -> SeriesEstimate:
    """sum_{k<N} r_k/(2k+1) with r_k = (2k-1)!!/(2k)!!; tends to pi/2 with tail ~ N^(-1/2)."""
    if terms < 1:
        raise InvalidInputError("need at least one term")
    r = double_factorial_ratios(terms)
    t = r / (2 * np.arange(terms) + 1)
    return SeriesEstimate(math.fsum(t), None, PARTIAL_SUM, terms, float(t[-1]))


# Tail of S after N terms expands in N^(-1/2), N^(-3/2), N^(-5/2), ...
TAIL_EXPONENTS = (0.5, 1.5, 2.5, 3.5)


def series_S_extrapolated(terms: int = 10**6, order: int = 3) -> SeriesEstimate:
    """Richardson extrapolation of series_S from partial sums at N, N/2, ..., N/2^order.

    Fits S_m = S + sum_j c_j m^(-e_j) for the first ``order`` tail exponents.
    ``error_proxy`` is the shift from the order - 1 extrapolation.
    """
    if not 1 <= order <= len(TAIL_EXPONENTS):
        raise InvalidInputError(f"order must be in 1..{len(TAIL_EXPONENTS)}")
    if terms >> order < 16:
        raise InvalidInputError("too few terms for the requested order")
    r = double_factorial_ratios(terms)
    t = r / (2 * np.arange(terms) + 1)
    sizes = [terms >> i for i in range(order + 1)]
    partial = {m: math.fsum(t[:m]) for m in sizes}

    def solve(nsizes: int) -> float:
        ms = sizes[:nsizes]
        exps = TAIL_EXPONENTS[: nsizes - 1]
        M = np.array([[1.0] + [m ** (-e) for e in exps] for m in ms])
        return float(np.linalg.solve(M, np.array([partial[m] for m in ms]))[0])

    value = solve(order + 1)
    return SeriesEstimate(value, None, EXTRAPOLATED, terms, abs(value - solve(order)))


# -- the quarter period ---------------------------------------------------


def quarter_period_de() -> QuadratureResult:
    """integral_0^1 (1 - x^2)^(-1/2) dx on the raw integrand, tanh-sinh."""
    return tanh_sinh(lambda x, da, db: 1.0 / np.sqrt(db * (1.0 + x)), 0.0, 1.0,
                     endpoint_distances=True)


def quarter_period_substituted() -> QuadratureResult:
    """Same integral after x = sin(theta); the Jacobian cos(theta) cancels the integrand."""
    return integrate(lambda th: 1.0, 0.0, 0.5 * math.pi)


def full_period_de() -> QuadratureResult:
    """integral_{-1}^1 (1 - x^2)^(-1/2) dx = pi."""
    return tanh_sinh(lambda x, da, db: 1.0 / np.sqrt(da * db), -1.0, 1.0, endpoint_distances=True)


def _atanh_cos_over_cos(x, da, db):
    # c = cos x = sin(pi/2 - x); 1 - c = 2 sin^2(x/2)
    c = np.sin(db)
    return (np.log1p(c) - np.log(2.0 * np.sin(0.5 * da) ** 2)) / (2.0 * c)


def period_chain_check(
    tol: float = config.CLOSED_FORM_TOL,
    series_tol: float = config.SERIES_LEG_TOL,
    series_terms: int = 10**6,
) -> list[IdentityCheck]:
    """Pairwise agreement of every finite quantity along the chain from the
    quarter-period integral to zeta_hat(M, 1).

    Legs involving the extrapolated binomial series use ``series_tol``.
    """
    A = 2.0 * zeta_accelerated(1.0).value
    odd_sq = odd_power_sum_direct(2.0)

    def q(res: QuadratureResult, scale: float = 1.0) -> SeriesEstimate:
        return SeriesEstimate(scale * res.value, None, QUADRATURE, res.evaluations,
                              abs(scale) * res.abs_error_estimate)

    legs = {
        "quadrature_raw": q(quarter_period_de()),
        "quadrature_substituted": q(quarter_period_substituted()),
        "half_full_period": q(full_period_de(), 0.5),
        "binomial_series": series_S_extrapolated(series_terms),
        "wallis_log_integral": q(tanh_sinh(_atanh_cos_over_cos, 0.0, 0.5 * math.pi,
                                           endpoint_distances=True), 1.0 / A),
        "log_kernel_integral": q(tanh_sinh(lambda u: -np.log(u) / (1.0 - u * u), 0.0, 1.0), 2.0 / A),
        "ratio": SeriesEstimate(2.0 / A * odd_sq.value, None, PARTIAL_SUM, odd_sq.cutoff,
                                2.0 / A * odd_sq.error_proxy),
        "zeta_hat_closed_form": zeta_hat_closed_form(1.0),
    }
    return pairwise("analysis.period_chain", legs, {"binomial_series": max(series_tol, tol)}, tol)
