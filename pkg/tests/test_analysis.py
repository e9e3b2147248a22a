import json
import math
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from conic_lseries.analysis import (
    DomainError,
    double_factorial,
    double_factorial_ratio,
    double_factorial_ratios,
    log_closed_form,
    log_kernel_check,
    log_kernel_integral,
    log_series,
    log_series_closed_form_check,
    period_chain_check,
    quarter_period_de,
    series_S,
    series_S_extrapolated,
    wallis,
    wallis_closed_form_check,
    wallis_quadrature,
)
from conic_lseries.field_arith import InvalidInputError
from conic_lseries.quadrature import QuadratureBudgetError, integrate, tanh_sinh

PI = math.pi
FIXTURES = Path(__file__).parent / "fixtures"


def test_integrate_examples():
    assert integrate(lambda x: math.cos(x) ** 2, 0, PI / 2).value == pytest.approx(PI / 4, abs=1e-13)
    assert integrate(lambda x: x, 0, 1).value == pytest.approx(0.5, abs=1e-15)
    full = tanh_sinh(lambda x, da, db: 1 / np.sqrt(da * db), -1, 1, endpoint_distances=True)
    assert full.value == pytest.approx(PI, abs=1e-13)


def test_tanh_sinh_without_distances_loses_accuracy_gracefully():
    # raw x-only evaluation still converges, just not to full precision
    r = tanh_sinh(lambda x: 1 / np.sqrt(1 - x * x), 0, 1, tol=1e-6)
    assert r.value == pytest.approx(PI / 2, abs=1e-6)


def test_budget_error_carries_estimate():
    with pytest.raises(QuadratureBudgetError) as exc:
        tanh_sinh(lambda x: np.sin(1 / x), 0, 1, tol=1e-15, max_level=4)
    assert math.isfinite(exc.value.best.value)


def test_double_factorials():
    assert double_factorial(9) == 945 and double_factorial(10) == 3840
    assert double_factorial(0) == double_factorial(-1) == 1


def test_ratio_exact_mode():
    for k in range(31):
        exact = double_factorial_ratio(k, exact_mode=True)
        assert exact == Fraction(double_factorial(2 * k - 1), double_factorial(2 * k))
        if k:
            assert exact / double_factorial_ratio(k - 1, exact_mode=True) == Fraction(2 * k - 1, 2 * k)
            assert float(exact) == pytest.approx(double_factorial_ratio(k), rel=1e-14)


def test_ratio_monotone_and_bounded():
    r = double_factorial_ratios(2000)
    assert r[0] == 1.0
    assert np.all(np.diff(r) < 0) and np.all(r > 0)
    # no overflow where factorial products would have
    assert double_factorial_ratio(500) > 0


@pytest.mark.parametrize("n,expected", [(0, PI / 2), (2, PI / 4), (4, 3 * PI / 16)])
def test_wallis_examples(n, expected):
    assert wallis(n) == pytest.approx(expected, abs=1e-15)


def test_wallis_rejects_odd():
    with pytest.raises(InvalidInputError):
        wallis(3)


@pytest.mark.parametrize("k", range(21))
def test_wallis_recurrence_vs_quadrature(k):
    assert abs(wallis(2 * k) - wallis_quadrature(2 * k).value) <= 1e-10


@pytest.mark.parametrize("k", [0, 1, 5])
def test_wallis_closed_form(k):
    checks = wallis_closed_form_check(k)
    assert all(c.passed for c in checks)
    assert wallis(2 * k) == pytest.approx(
        double_factorial(2 * k - 1) / double_factorial(2 * k) * PI / 2, abs=1e-15)


def test_series_S_small():
    assert series_S(1).value == 1.0
    assert series_S(2).value == pytest.approx(1 + 1 / 6, abs=1e-15)


def test_series_S_monotone_below_limit():
    vals = [series_S(N).value for N in (1, 2, 5, 10, 100, 1000, 10**4)]
    assert vals == sorted(vals) and vals[-1] < PI / 2


def test_series_S_extrapolation_calibration():
    fixture = json.loads((FIXTURES / "series_S_richardson.json").read_text())
    order = fixture["chosen_order"]
    recorded = {row["order"]: row["error"] for row in fixture["calibration"]}
    assert abs(recorded[order]) <= 1e-12
    est = series_S_extrapolated(fixture["terms"], order)
    assert abs(est.value - PI / 2) <= 1e-6
    # plain partial sum is far off, which is why extrapolation is needed
    assert abs(series_S(10**6).value - PI / 2) > 1e-4


@pytest.mark.parametrize("t", [0.1, 0.3, 0.5, 0.7, 0.9])
def test_log_series_closed_form(t):
    check = log_series_closed_form_check(t, 1e-10)
    assert check.passed, check.summary()


def test_log_closed_form_values():
    assert log_closed_form(0.5) == pytest.approx(math.log(3), abs=1e-15)
    assert log_series(0.5, 60) == pytest.approx(math.log(3), abs=1e-15)
    assert log_closed_form(0.0) == 1.0
    assert log_closed_form(1e-9) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(DomainError):
        log_series_closed_form_check(1.0)
    with pytest.raises(DomainError):
        log_closed_form(-1.5)


@pytest.mark.parametrize("k", range(21))
def test_log_kernel(k):
    assert abs(log_kernel_integral(k).value - 1 / (2 * k + 1) ** 2) <= 1e-10
    assert log_kernel_check(k).passed


def test_quarter_period():
    assert quarter_period_de().value == pytest.approx(PI / 2, abs=1e-12)


def test_period_chain():
    checks = period_chain_check()
    assert checks, "no legs compared"
    for c in checks:
        assert c.passed, c.summary()
        expected_tol = 1e-6 if "binomial_series" in c.identity_id else 1e-10
        assert c.tolerance == expected_tol
