"""The mod-4 L-series zeta(M, s) and its twisted partner zeta_hat(M, s).

    zeta(M, s)     = sum_{n odd} chi(n) n^-s     = prod_p 1 / (1 - a_p p^-s)
    zeta_hat(M, s) = sum_{n odd} chi_hat(n) n^-s = prod_p 1 / (1 + a_p p^-s)

Their product is sum_{n odd} n^-2s.  At s = 1 the values are pi/4 and pi/2.

Sums run in ascending n and products in ascending p; the series converge
only conditionally at s = 1, so order is part of the result.  Accumulation
goes through ``math.fsum`` (exactly rounded), so chunked evaluation gives
the same answer as a single pass.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import config
from .arith import a_p, a_prime_power, alpha_prime_power, odd_character_arrays, primes_upto
from .checks import (
    ACCELERATED_SUM,
    CLOSED_FORM,
    EULER_PRODUCT,
    PARTIAL_SUM,
    IdentityCheck,
    SeriesEstimate,
    exact,
)
from .field_arith import InvalidInputError

SERIES = ("zeta", "zeta_hat")


def euler_factor_zeta(p: int, s: float) -> float:
    return 1.0 / (1.0 - a_p(p) * p ** (-s))


def euler_factor_zeta_hat(p: int, s: float) -> float:
    return 1.0 / (1.0 + a_p(p) * p ** (-s))


def euler_factor_truncated(p: int, s: float, twisted: bool = False, terms: int = 51) -> float:
    """Geometric local factor summed term by term: sum_{k<terms} c_{p^k} p^-ks."""
    coef = alpha_prime_power if twisted else a_prime_power
    return math.fsum(coef(p, k) * p ** (-k * s) for k in range(terms))


def _check_s(s: float, lower: float) -> None:
    if not s > lower:
        raise InvalidInputError(f"s = {s} must exceed {lower}")


def _alternating_terms(s: float, terms: int) -> np.ndarray:
    n = 2.0 * np.arange(terms) + 1.0
    signs = np.where(np.arange(terms) % 2 == 0, 1.0, -1.0)
    return signs * n ** (-s)


def zeta_partial(s: float, terms: int) -> SeriesEstimate:
    """sum_{k=1..N} chi(2k-1) (2k-1)^-s."""
    _check_s(s, 0)
    if terms < 1:
        raise InvalidInputError("need at least one term")
    value = math.fsum(_alternating_terms(s, terms))
    return SeriesEstimate(value, s, PARTIAL_SUM, terms, (2 * terms + 1) ** (-s))


def zeta_accelerated(s: float, terms: int = config.ACCELERATED_TERMS) -> SeriesEstimate:
    """Euler transform of the alternating sum, done as repeated averaging of partial sums.

    Each averaging pass halves the leading error of a completely monotone
    alternating series; after N - 1 passes the N partial sums collapse to one
    value.  ``error_proxy`` is the spread of the last two intermediate values.
    """
    _check_s(s, 0)
    if terms < 1:
        raise InvalidInputError("need at least one term")
    sums = np.cumsum(_alternating_terms(s, terms))
    if terms == 1:
        return SeriesEstimate(float(sums[0]), s, ACCELERATED_SUM, 1, float(3.0 ** (-s)))
    while len(sums) > 2:
        sums = 0.5 * (sums[1:] + sums[:-1])
    value = 0.5 * (sums[0] + sums[1])
    return SeriesEstimate(float(value), s, ACCELERATED_SUM, terms, float(abs(sums[1] - sums[0]) / 2))


def zeta_hat_partial(s: float, terms: int) -> SeriesEstimate:
    """sum_{k=1..N} chi_hat(2k-1) (2k-1)^-s; ``error_proxy`` compares with N // 2 terms."""
    _check_s(s, 0.5)
    if terms < 1:
        raise InvalidInputError("need at least one term")
    n, _, chi_hat_v = odd_character_arrays(terms)
    t = chi_hat_v * n.astype(float) ** (-s)
    value = math.fsum(t)
    half = math.fsum(t[: max(terms // 2, 1)])
    return SeriesEstimate(value, s, PARTIAL_SUM, terms, abs(value - half))


def zeta_hat_series(s: float, terms: int) -> SeriesEstimate:
    """Same sum as zeta_hat_partial, evaluated one scalar character at a time (slow oracle)."""
    from .arith import chi_hat

    _check_s(s, 0.5)
    value = math.fsum(chi_hat(2 * k - 1) * (2 * k - 1) ** (-s) for k in range(1, terms + 1))
    return SeriesEstimate(value, s, PARTIAL_SUM, terms, 0.0)


# -- Riemann zeta at real x > 1 ------------------------------------------

# B_2, B_4, ..., B_20
_BERNOULLI = tuple(Fraction(*b) for b in (
    (1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730), (7, 6),
    (-3617, 510), (43867, 798), (-174611, 330),
))


def riemann_zeta(x: float, n_direct: int = 20) -> float:
    """zeta(x) for real x > 1 by Euler-Maclaurin summation past n_direct terms."""
    _check_s(x, 1)
    N = n_direct
    head = math.fsum(k ** (-x) for k in range(1, N))
    tail = [N ** (1 - x) / (x - 1), 0.5 * N ** (-x)]
    # B_2j / (2j)! * x (x+1) ... (x+2j-2) * N^(-x-2j+1)
    rising = x
    for j, b in enumerate(_BERNOULLI, start=1):
        term = float(b) / math.factorial(2 * j) * rising * N ** (-x - 2 * j + 1)
        tail.append(term)
        rising *= (x + 2 * j - 1) * (x + 2 * j)
    return math.fsum([head, *tail])


def odd_zeta(x: float) -> float:
    """sum_{n odd} n^-x = (1 - 2^-x) zeta(x)."""
    return (1.0 - 2.0 ** (-x)) * riemann_zeta(x)


def odd_power_sum_direct(x: float, terms: int = 10**6) -> SeriesEstimate:
    """sum_{n odd} n^-x by direct summation of ``terms`` terms plus a midpoint-rule tail.

    The tail sum_{k>=N} (2k+1)^-x is approximated by (1/2) * integral_{2N}^inf t^-x dt,
    whose error is about x (2N)^(-x-1) / 12.
    """
    _check_s(x, 1)
    n = 2.0 * np.arange(terms) + 1.0
    head = math.fsum(n ** (-x))
    tail = (2.0 * terms) ** (1 - x) / (2 * (x - 1))
    err = x * (2.0 * terms) ** (-x - 1) / 12
    return SeriesEstimate(head + tail, x / 2, PARTIAL_SUM, terms, err)


def zeta_hat_closed_form(s: float, terms: int = config.ACCELERATED_TERMS) -> SeriesEstimate:
    """zeta_hat(M, s) = [sum_{n odd} n^-2s] / zeta(M, s)."""
    _check_s(s, 0.5)
    den = zeta_accelerated(s, terms)
    return exact(odd_zeta(2 * s) / den.value, s, CLOSED_FORM)


def euler_product(series: str, s: float, prime_bound: int) -> SeriesEstimate:
    """Truncated Euler product over odd primes <= prime_bound, multiplied in ascending order.

    ``error_proxy`` is the change from the product over primes <= prime_bound // 2.
    """
    if series not in SERIES:
        raise InvalidInputError(f"series must be one of {SERIES}")
    if s < 1:
        raise InvalidInputError("Euler products are evaluated for s >= 1")
    if prime_bound < 3:
        raise InvalidInputError("prime bound must be >= 3")
    primes, running = _running_product(series, s, prime_bound)
    value = float(running[-1])
    half = np.searchsorted(primes, prime_bound // 2, side="right")
    previous = float(running[half - 1]) if half > 0 else 1.0
    return SeriesEstimate(value, s, EULER_PRODUCT, prime_bound, abs(value - previous))


def euler_product_curve(series: str, s: float, bounds) -> list[tuple[int, float]]:
    """Partial products at each bound in ``bounds`` from a single pass."""
    bounds = sorted(bounds)
    primes, running = _running_product(series, s, bounds[-1])
    out = []
    for b in bounds:
        i = np.searchsorted(primes, b, side="right")
        out.append((b, float(running[i - 1]) if i else 1.0))
    return out


def _running_product(series: str, s: float, prime_bound: int) -> tuple[np.ndarray, np.ndarray]:
    primes = primes_upto(prime_bound)
    primes = primes[primes > 2]
    ap = np.where(primes % 4 == 1, 1.0, -1.0)
    sign = -1.0 if series == "zeta" else 1.0
    # cumprod multiplies strictly left to right: ascending p
    return primes, np.cumprod(1.0 / (1.0 + sign * ap * primes.astype(float) ** (-s)))


def zeta_hat_estimate(s: float, method: str, cutoff: int | None = None) -> SeriesEstimate:
    if method == CLOSED_FORM:
        return zeta_hat_closed_form(s)
    if method == EULER_PRODUCT:
        return euler_product("zeta_hat", s, cutoff or config.EULER_PRODUCT_PRIMES)
    if method == PARTIAL_SUM:
        return zeta_hat_partial(s, cutoff or 10**6)
    raise InvalidInputError(f"unknown method {method!r} for zeta_hat")


def functional_equation_check(
    s: float,
    tol: float = config.FUNCTIONAL_EQUATION_TOL,
    hat_method: str = CLOSED_FORM,
    cutoff: int | None = None,
) -> IdentityCheck:
    """zeta(M, s) * zeta_hat(M, s) against sum_{n odd} n^-2s summed directly.

    The left side uses Euler-Maclaurin for the odd zeta value inside the
    closed form; the right side never touches it.
    """
    if s < 1:
        raise InvalidInputError("functional equation is checked for s >= 1")
    z = zeta_accelerated(s)
    zh = zeta_hat_estimate(s, hat_method, cutoff)
    lhs = SeriesEstimate(z.value * zh.value, s, f"{ACCELERATED_SUM}*{zh.method}", zh.cutoff,
                         abs(z.value) * zh.error_proxy + abs(zh.value) * z.error_proxy)
    rhs = odd_power_sum_direct(2 * s)
    return IdentityCheck(f"lseries.functional_equation[{hat_method}]", lhs, rhs, tol, s)


def special_value_checks(tol: float = config.CLOSED_FORM_TOL,
                         accel_tol: float = config.ACCELERATED_TOL,
                         euler_tol: float = config.EULER_PRODUCT_TOL,
                         prime_bound: int = config.EULER_PRODUCT_PRIMES) -> list[IdentityCheck]:
    pi = math.pi
    z1 = zeta_accelerated(1.0)
    zh1 = zeta_hat_closed_form(1.0)
    return [
        IdentityCheck("lseries.zeta_at_1=pi/4", z1, exact(pi / 4, 1.0), accel_tol, 1.0),
        IdentityCheck("lseries.zeta_hat_at_1=pi/2[closed_form]", zh1, exact(pi / 2, 1.0), tol, 1.0),
        IdentityCheck("lseries.zeta_hat_at_1=pi/2[euler_product]",
                      euler_product("zeta_hat", 1.0, prime_bound), exact(pi / 2, 1.0),
                      max(tol, euler_tol), 1.0),
        IdentityCheck("lseries.odd_square_sum=pi^2/8", odd_power_sum_direct(2.0), exact(pi**2 / 8, 1.0), tol, 1.0),
        IdentityCheck("lseries.product_at_1=pi^2/8",
                      SeriesEstimate(z1.value * zh1.value, 1.0, f"{ACCELERATED_SUM}*{CLOSED_FORM}", z1.cutoff),
                      exact(pi**2 / 8, 1.0), tol, 1.0),
    ]
