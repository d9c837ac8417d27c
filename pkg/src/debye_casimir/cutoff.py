"""Surface tension and the time-splitting cutoff of field theory.

For a dilute dielectric ball (``eps - 1 << 1``) the zero-temperature
Casimir surface force density with a time-splitting regulator ``tau`` is::

    f = -(eps - 1)^2 hbar c / (16^2 pi a^4) * [16 / delta^3 + 1/4],  delta = tau c / a

Equating the cutoff-dependent term to the hydrodynamic stress ``2 sigma / a``
of a fluid sphere fixes::

    tau c = [(eps - 1)^2 hbar c / (32 pi sigma)]^(1/3)

which does not depend on the radius.  This is a dimensional suggestion,
not a derivation: whether cutoffs of atomic size are typical beyond this
one example is an open question, and nothing here claims otherwise.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .model import _positive

__all__ = [
    "HBAR",
    "C_LIGHT",
    "ANGSTROM",
    "BallParameters",
    "milton_surface_force",
    "cutoff_distance",
    "cutoff_time",
    "cutoff_prefactor",
    "surface_tension_stress",
]

#: Reduced Planck constant, erg s (CODATA, rounded to 7 digits).
HBAR = 1.054572e-27
#: Speed of light, cm/s (rounded to 7 digits).
C_LIGHT = 2.997925e10
ANGSTROM = 1e-8

_DILUTE_LIMIT = 0.1


def _susceptibility(value) -> float:
    v = _positive("epsilon_minus_1", value)
    if v > _DILUTE_LIMIT:
        warnings.warn(
            f"epsilon_minus_1={v} is outside the dilute regime (<= {_DILUTE_LIMIT}); "
            "the force formula is only valid to leading order in eps - 1",
            RuntimeWarning,
            stacklevel=3,
        )
    return v


@dataclass(frozen=True)
class BallParameters:
    """Dilute dielectric ball.  ``delta`` is the cutoff in units of the radius."""

    epsilon_minus_1: float
    a_ball: float
    sigma: float
    delta: float

    def __post_init__(self):
        _positive("epsilon_minus_1", self.epsilon_minus_1)
        _positive("a_ball", self.a_ball)
        _positive("sigma", self.sigma)
        _positive("delta", self.delta)

    @property
    def tau(self) -> float:
        """Cutoff time, s."""
        return self.delta * self.a_ball / C_LIGHT


def milton_surface_force(ball: BallParameters) -> float:
    """Surface force density on the ball, dyne/cm^2; always negative (inward)."""
    e = _susceptibility(ball.epsilon_minus_1)
    scale = e**2 * HBAR * C_LIGHT / (16.0**2 * math.pi * ball.a_ball**4)
    return -scale * (16.0 / ball.delta**3 + 0.25)


def surface_tension_stress(sigma: float, a_ball: float) -> float:
    """Laplace stress ``2 sigma / a`` of a fluid sphere."""
    return 2.0 * sigma / a_ball


def cutoff_prefactor() -> float:
    """``(hbar c / (32 pi))^(1/3)`` in cgs, about 6.80e-7."""
    return (HBAR * C_LIGHT / (32.0 * math.pi)) ** (1.0 / 3.0)


def cutoff_distance(epsilon_minus_1: float, sigma: float) -> float:
    """Photon path ``tau c`` during the splitting time, cm.

    Parameters
    ----------
    epsilon_minus_1 : float
        Susceptibility ``eps - 1`` (dilute, > 0).
    sigma : float
        Surface tension, dyne/cm.
    """
    e = _susceptibility(epsilon_minus_1)
    sigma = _positive("sigma", sigma)
    return (e**2 * HBAR * C_LIGHT / (32.0 * math.pi * sigma)) ** (1.0 / 3.0)


def cutoff_time(epsilon_minus_1: float, sigma: float) -> float:
    """Splitting time ``tau``, s."""
    return cutoff_distance(epsilon_minus_1, sigma) / C_LIGHT
