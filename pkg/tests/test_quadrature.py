import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from debye_casimir.model import QuadratureSpec, ValidationError
from debye_casimir.quadrature import (
    ConvergenceError,
    integrate_interval,
    integrate_semi_infinite,
    sum_series,
)

LN2M1 = 2.0 * math.log(2.0) - 1.0
SPEC = QuadratureSpec()


def exp_decay(t):
    return np.exp(-t)


def contact_internal(t):
    # e^{-4t} sinh^2 t / (1 - e^{-4t}); t = 0 is never evaluated
    return np.sinh(t) ** 2 / np.expm1(4.0 * t)


def contact_force(t):
    return np.sinh(t) ** 2 * np.cosh(t) / np.expm1(4.0 * t)


def test_exponential():
    r = integrate_semi_infinite(exp_decay, 1.0)
    assert r.value == pytest.approx(1.0, rel=1e-10)
    assert r.error_estimate >= 0.0
    assert r.truncation_point > 0.0
    assert r.evaluations > 0


def test_contact_internal_integrand():
    r = integrate_semi_infinite(contact_internal, 2.0)
    assert r.value == pytest.approx(LN2M1 / 8.0, rel=1e-10)
    assert r.value == pytest.approx(0.048286795, abs=1e-9)


def test_contact_force_integrand():
    r = integrate_semi_infinite(contact_force, 1.0)
    assert r.value == pytest.approx(1.0 / 12.0, rel=1e-10)


def test_error_within_tolerance_contract():
    r = integrate_semi_infinite(contact_force, 1.0)
    true_err = abs(r.value - 1.0 / 12.0)
    assert true_err <= max(SPEC.abs_tol, SPEC.rel_tol * abs(r.value))


def test_scalar_only_integrand():
    r = integrate_semi_infinite(lambda t: math.exp(-2.0 * t), 2.0)
    assert r.value == pytest.approx(0.5, rel=1e-10)


def test_bad_hint():
    with pytest.raises(ValidationError):
        integrate_semi_infinite(exp_decay, 0.0)


def test_not_decaying_raises():
    with pytest.raises(ConvergenceError):
        integrate_semi_infinite(lambda t: np.ones_like(t), 1.0)


def test_subdivision_cap_raises_with_estimate():
    spec = QuadratureSpec(rel_tol=1e-14, abs_tol=1e-300, max_subdivisions=1)
    with pytest.raises(ConvergenceError) as info:
        integrate_interval(lambda t: np.sqrt(t), 0.0, 1.0, spec)
    assert info.value.value == pytest.approx(2.0 / 3.0, rel=1e-3)
    assert info.value.error_estimate > 0.0


def test_interval_orientation():
    fwd = integrate_interval(np.sin, 0.0, 2.0).value
    back = integrate_interval(np.sin, 2.0, 0.0).value
    assert fwd == pytest.approx(1.0 - math.cos(2.0), rel=1e-12)
    assert back == -fwd
    assert integrate_interval(np.sin, 1.0, 1.0).value == 0.0


@pytest.mark.parametrize("alpha", [-1.0, 2.0, 10.0])
def test_linearity(alpha):
    base = integrate_semi_infinite(contact_force, 1.0).value
    scaled = integrate_semi_infinite(lambda t: alpha * contact_force(t), 1.0).value
    assert scaled == pytest.approx(alpha * base, rel=SPEC.rel_tol)


@settings(max_examples=25, deadline=None)
@given(alpha=st.floats(min_value=-50.0, max_value=50.0).filter(lambda a: abs(a) > 1e-3),
       rate=st.floats(min_value=0.2, max_value=20.0))
def test_linearity_property(alpha, rate):
    r = integrate_semi_infinite(lambda t: alpha * np.exp(-rate * t), rate)
    assert r.value == pytest.approx(alpha / rate, rel=1e-9)


def test_determinism():
    a = integrate_semi_infinite(contact_force, 1.0)
    b = integrate_semi_infinite(contact_force, 1.0)
    assert a == b


@pytest.mark.parametrize("margin", [10.0, 20.0, 40.0])
def test_truncation_safety(margin):
    base = integrate_semi_infinite(contact_internal, 2.0)
    wider = integrate_semi_infinite(contact_internal, 2.0, QuadratureSpec(truncation_margin=margin))
    assert wider.truncation_point > base.truncation_point
    assert abs(wider.value - base.value) <= base.error_estimate


def test_slow_tail_extends_truncation():
    # hint claims faster decay than the integrand has
    r = integrate_semi_infinite(lambda t: np.exp(-0.5 * t), 1.0)
    assert r.value == pytest.approx(2.0, rel=1e-9)


def test_series_geometric():
    r = sum_series(lambda n: 2.0 ** -n)
    assert r.value == pytest.approx(1.0, rel=1e-12)


def test_series_contact_force():
    term = lambda n: 8.0 * n / ((16.0 * n * n - 9.0) * (16.0 * n * n - 1.0))
    r = sum_series(term)
    assert r.value == pytest.approx(1.0 / 12.0, rel=1e-10)


def test_series_matches_brute_force():
    term = lambda n: 8.0 * n / ((16.0 * n * n - 9.0) * (16.0 * n * n - 1.0))
    n = np.arange(1, 10**6 + 1, dtype=float)
    brute = math.fsum(term(n))
    assert sum_series(term).value == pytest.approx(brute, rel=1e-10)


def test_series_partial_fraction():
    term = lambda n: 0.25 * (1.0 / (2.0 * n - 1.0) - 1.0 / n + 1.0 / (2.0 * n + 1.0))
    r = sum_series(term)
    assert r.value == pytest.approx(LN2M1 / 4.0, rel=1e-10)
    assert 2.0 * r.value == pytest.approx(LN2M1 / 2.0, rel=1e-10)


@pytest.mark.parametrize("term,exact", [
    (lambda n: 1.0 / n**2, math.pi**2 / 6.0),
    (lambda n: 1.0 / n**3, 1.2020569031595942),
    (lambda n: 0.9**n, 9.0),
])
def test_series_tail_bound_covers_remainder(term, exact):
    r = sum_series(term, QuadratureSpec(rel_tol=1e-6))
    last = int(r.truncation_point)
    partial = math.fsum(term(np.arange(1, last + 1, dtype=float)))
    remainder = exact - partial
    assert r.error_estimate >= abs(remainder) * (1.0 - 1e-9)
    # doubling the term count leaves a remainder the bound still covers
    partial2 = math.fsum(term(np.arange(1, 2 * last + 1, dtype=float)))
    assert r.error_estimate >= abs(exact - partial2)


def test_series_divergent():
    with pytest.raises(ConvergenceError):
        sum_series(lambda n: 1.0 / n, max_terms=2**12)
