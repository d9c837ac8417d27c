import math
import warnings

import numpy as np
import pytest

from debye_casimir import cutoff
from debye_casimir.cutoff import BallParameters
from debye_casimir.model import ValidationError


def test_published_example():
    tc = cutoff.cutoff_distance(0.01, 73.0)
    assert tc / cutoff.ANGSTROM == pytest.approx(0.75, abs=0.01)
    assert cutoff.cutoff_time(0.01, 73.0) == pytest.approx(2.5e-19, rel=0.02)


def test_prefactor():
    assert cutoff.HBAR * cutoff.C_LIGHT == pytest.approx(3.1615e-17, rel=1e-4)
    assert cutoff.cutoff_prefactor() == pytest.approx(6.80e-7, abs=0.005e-7)
    assert cutoff.cutoff_distance(0.02, 5.0) == pytest.approx(
        cutoff.cutoff_prefactor() * (0.02**2 / 5.0) ** (1.0 / 3.0), rel=1e-14)


def test_eightfold_tension_halves_cutoff():
    assert cutoff.cutoff_distance(0.01, 8.0 * 73.0) == pytest.approx(0.5 * cutoff.cutoff_distance(0.01, 73.0), rel=1e-14)


def test_scaling_over_three_decades():
    sig = np.logspace(0.0, 3.0, 7)
    tau = [cutoff.cutoff_time(0.01, s) for s in sig]
    slope = np.polyfit(np.log(sig), np.log(tau), 1)[0]
    assert slope == pytest.approx(-1.0 / 3.0, rel=1e-10)


@pytest.mark.parametrize("args", [(0.0, 73.0), (0.01, 0.0), (-0.01, 73.0), (0.01, math.nan)])
def test_invalid(args):
    with pytest.raises(ValidationError):
        cutoff.cutoff_time(*args)


def test_dilute_warning():
    with pytest.warns(RuntimeWarning, match="dilute"):
        cutoff.cutoff_distance(0.5, 73.0)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        cutoff.cutoff_distance(0.1, 73.0)


@pytest.mark.parametrize("a_ball", [1e-4, 1e-2, 1.0])
def test_balance_closes(a_ball):
    e, sigma = 0.01, 73.0
    tc = cutoff.cutoff_distance(e, sigma)
    delta = tc / a_ball
    lhs = e**2 * cutoff.HBAR * cutoff.C_LIGHT / (16.0 * math.pi * a_ball**4 * delta**3)
    assert lhs == pytest.approx(cutoff.surface_tension_stress(sigma, a_ball), rel=1e-12)
    # the cutoff term of the ball force carries that stress
    ball = BallParameters(e, a_ball, sigma, delta)
    cut_term = -cutoff.milton_surface_force(ball) - e**2 * cutoff.HBAR * cutoff.C_LIGHT / (1024.0 * math.pi * a_ball**4)
    assert cut_term == pytest.approx(lhs, rel=1e-10)
    assert ball.tau == pytest.approx(cutoff.cutoff_time(e, sigma), rel=1e-14)


def test_milton_force():
    b = BallParameters(0.01, 1e-3, 73.0, 1e9)
    limit = -(0.01**2) * cutoff.HBAR * cutoff.C_LIGHT / (1024.0 * math.pi * 1e-12)
    assert cutoff.milton_surface_force(b) == pytest.approx(limit, rel=1e-12)
    for delta in (1e-3, 1.0, 1e3):
        assert cutoff.milton_surface_force(BallParameters(0.05, 0.2, 1.0, delta)) < 0.0
    f1 = cutoff.milton_surface_force(BallParameters(0.01, 1.0, 73.0, 0.3))
    f2 = cutoff.milton_surface_force(BallParameters(0.01, 2.0, 73.0, 0.3))
    assert f2 == pytest.approx(f1 / 16.0, rel=1e-14)


def test_ball_validation():
    with pytest.raises(ValidationError):
        BallParameters(0.01, 1.0, 73.0, 0.0)
