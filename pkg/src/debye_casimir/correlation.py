"""Transverse-Fourier screened potential for two plasma half-spaces.

A unit point source sits at ``z0 < 0`` in the lower plasma (z < 0); the
gap 0 < z < a is vacuum and the upper plasma fills z > a.  In each region
the transformed potential is a sum of exponentials with coefficients
``B`` (lower medium), ``C, C1`` (gap) and ``D`` (upper medium), all
written relative to the common factor ``2 pi exp(q_kappa z0)``.

``a = math.inf`` is a distinguished input: every ``exp(-2 q a)`` factor is
taken as exactly zero, the gap extends to +inf and ``D`` is reported as 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import DomainError, PlasmaParameters, ValidationError

__all__ = [
    "SlabCoefficients",
    "PotentialProfile",
    "coefficients",
    "phi_hat",
    "potential_profile",
    "pair_correlation_hat",
    "boundary_residuals",
    "reflection_A",
    "log_reflection_A",
    "B_coefficient",
    "D_coefficient",
    "D_at_gap",
]


class SingularModeError(DomainError):
    """The q = 0 mode, where the coefficient denominators vanish."""


@dataclass(frozen=True)
class SlabCoefficients:
    A: float
    B: float
    C: float
    C1: float
    D: float
    q: float
    kappa: float
    a: float

    @property
    def q_kappa(self) -> float:
        return math.hypot(self.q, self.kappa)


@dataclass(frozen=True)
class PotentialProfile:
    z: np.ndarray
    values: np.ndarray
    z0: float
    q: float
    kappa: float
    a: float


def _check_mode(q, kappa, a):
    for name, v in (("q", q), ("kappa", kappa)):
        if not math.isfinite(v):
            raise ValidationError(name, v, "finite")
    if q == 0.0:
        raise SingularModeError("q = 0 is a singular mode (1 - A exp(-2qa) vanishes)")
    if q < 0.0:
        raise ValidationError("q", q, "> 0")
    if kappa <= 0.0:
        raise ValidationError("kappa", kappa, "> 0")
    if math.isnan(a) or a < 0.0:
        raise ValidationError("a", a, ">= 0 (inf allowed)")


# Vectorized building blocks.  ``q`` may be an array; ``a`` is a scalar.

def _parts(q, kappa, a):
    q = np.asarray(q, dtype=float)
    q_kappa = np.hypot(q, kappa)
    s = q_kappa + q
    diff = kappa**2 / s  # q_kappa - q without cancellation
    log_A = log_reflection_A(q, kappa)
    if math.isinf(a):
        e2qa = np.zeros_like(q)
        den = np.ones_like(q)
    else:
        e2qa = np.exp(-2.0 * q * a)
        den = -np.expm1(log_A - 2.0 * q * a)  # 1 - A exp(-2qa)
    return q, q_kappa, s, diff, log_A, e2qa, den


def reflection_A(q, kappa):
    """``A = ((q_kappa - q)/(q_kappa + q))**2``."""
    q = np.asarray(q, dtype=float)
    s = np.hypot(q, kappa) + q
    return (kappa**2 / s**2) ** 2


def log_reflection_A(q, kappa):
    """``log A = 4 log(kappa / (q_kappa + q))``; finite where ``A`` underflows."""
    q = np.asarray(q, dtype=float)
    return 4.0 * (math.log(kappa) - np.log(np.hypot(q, kappa) + q))


def B_coefficient(q, kappa, a):
    q, q_kappa, s, diff, _, e2qa, den = _parts(q, kappa, a)
    one_minus = np.ones_like(q) if math.isinf(a) else -np.expm1(-2.0 * q * a)
    return diff * one_minus / (q_kappa * s * den)


def D_coefficient(q, kappa, a):
    """Raw ``D``; grows like ``exp((q_kappa - q) a)``.  Zero for ``a = inf``."""
    q, q_kappa, s, diff, _, e2qa, den = _parts(q, kappa, a)
    if math.isinf(a):
        return np.zeros_like(q)
    return 4.0 * q * np.exp(diff * a) / (s**2 * den)


def D_at_gap(q, kappa, a):
    """``D exp(-(q_kappa + q) a)``, evaluated without forming ``D``."""
    q, q_kappa, s, diff, _, e2qa, den = _parts(q, kappa, a)
    return 4.0 * q * e2qa / (s**2 * den)


def coefficients(q: float, kappa: float, a: float) -> SlabCoefficients:
    """Coefficients of the piecewise transformed potential at one mode.

    ``C`` and ``C1`` follow from continuity of the potential and its
    z-derivative at ``z = a`` given ``D``::

        C  = D exp((q - q_kappa) a) (q_kappa + q) / (2 q)
        C1 = D exp(-(q_kappa + q) a) (q - q_kappa) / (2 q)

    For ``a = inf`` the gap solution is pure decay, ``C = 2/(q_kappa + q)``
    and ``C1 = 0``.
    """
    q = float(q)
    kappa = float(kappa)
    a = float(a)
    _check_mode(q, kappa, a)
    q_kappa = math.hypot(q, kappa)
    A = float(reflection_A(q, kappa))
    B = float(B_coefficient(q, kappa, a))
    if math.isinf(a):
        return SlabCoefficients(A=A, B=B, C=2.0 / (q_kappa + q), C1=0.0, D=0.0, q=q, kappa=kappa, a=a)
    D = float(D_coefficient(q, kappa, a))
    C = D * math.exp((q - q_kappa) * a) * (q_kappa + q) / (2.0 * q)
    C1 = D * math.exp(-(q_kappa + q) * a) * (q - q_kappa) / (2.0 * q)
    return SlabCoefficients(A=A, B=B, C=C, C1=C1, D=D, q=q, kappa=kappa, a=a)


def phi_hat(z, z0: float, q: float, kappa: float, a: float):
    """Transformed potential at height(s) ``z`` for a source at ``z0 < 0``.

    Returns a float for scalar ``z`` and an array otherwise.  Exponentials
    are combined before evaluation so large ``a`` or ``|z|`` cannot
    overflow.
    """
    z0 = float(z0)
    if not z0 < 0.0:
        raise DomainError(f"z0={z0!r}: source must lie in the lower medium (z0 < 0)")
    c = coefficients(q, kappa, a)
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    qk = c.q_kappa
    s = qk + q
    den = 1.0 if math.isinf(a) else float(-np.expm1(log_reflection_A(q, kappa) - 2.0 * q * a))
    out = np.empty_like(z)

    lower = z < 0.0
    zl = z[lower]
    out[lower] = np.exp(-qk * np.abs(zl - z0)) / qk + c.B * np.exp(qk * (zl + z0))

    gap = (z >= 0.0) & (z < a)
    zg = z[gap]
    # C e^{-qz} and C1 e^{qz} rewritten with the D prefactor folded in
    c_term = 2.0 / (s * den) * np.exp(-q * zg)
    c1_term = 0.0 if math.isinf(a) else -2.0 * (kappa**2 / s) / (s**2 * den) * np.exp(-q * (2.0 * a - zg))
    out[gap] = np.exp(qk * z0) * (c_term + c1_term)

    upper = z >= a
    if np.any(upper):
        zu = z[upper]
        out[upper] = np.exp(qk * z0) * 4.0 * q / (s**2 * den) * np.exp(-q * a - qk * (zu - a))

    out *= 2.0 * math.pi
    return float(out[0]) if scalar else out


def potential_profile(z, z0: float, q: float, kappa: float, a: float) -> PotentialProfile:
    z = np.asarray(z, dtype=float)
    return PotentialProfile(z=z, values=phi_hat(z, z0, q, kappa, a), z0=float(z0), q=q, kappa=kappa, a=a)


def pair_correlation_hat(params: PlasmaParameters, z, z0: float, q: float, a: float):
    """Transformed pair correlation ``-beta q_c**2 phi_hat``."""
    return -params.beta * params.q_c**2 * phi_hat(z, z0, q, params.kappa, a)


def _rel(left, right, scale):
    return abs(left - right) / scale if scale > 0.0 else abs(left - right)


def boundary_residuals(q: float, kappa: float, a: float, z0: float, coeffs: SlabCoefficients | None = None):
    """Continuity residuals of value and slope at ``z = 0`` and ``z = a``.

    Each branch is evaluated from the coefficient values directly, so a
    wrong ``B``, ``C``, ``C1`` or ``D`` shows up here.  Value residuals are
    scaled by the larger one-sided value, slope residuals by
    ``max(|slopes|, q_kappa |value|)``.  For ``a = inf`` the ``z = a``
    residuals are 0 by definition.

    Returns
    -------
    tuple of float
        ``(r_value_0, r_slope_0, r_value_a, r_slope_a)``
    """
    z0 = float(z0)
    if not z0 < 0.0:
        raise DomainError(f"z0={z0!r}: source must lie in the lower medium (z0 < 0)")
    c = coeffs if coeffs is not None else coefficients(q, kappa, a)
    q = c.q
    qk = c.q_kappa
    pref = 2.0 * math.pi * math.exp(qk * z0)

    # z = 0: lower branch (z0 < z < 0) against gap branch
    v_lo = pref * (1.0 / qk + c.B)
    d_lo = pref * (-1.0 + qk * c.B)
    v_gap = pref * (c.C + c.C1)
    d_gap = pref * (-q * c.C + q * c.C1)
    r_v0 = _rel(v_lo, v_gap, max(abs(v_lo), abs(v_gap)))
    r_d0 = _rel(d_lo, d_gap, max(abs(d_lo), abs(d_gap), qk * abs(v_lo)))

    if math.isinf(c.a):
        return r_v0, r_d0, 0.0, 0.0

    a = c.a
    v_gap_a = pref * (c.C * math.exp(-q * a) + c.C1 * math.exp(q * a))
    d_gap_a = pref * q * (-c.C * math.exp(-q * a) + c.C1 * math.exp(q * a))
    v_up = pref * c.D * math.exp(-qk * a)
    d_up = -qk * v_up
    r_va = _rel(v_gap_a, v_up, max(abs(v_gap_a), abs(v_up)))
    r_da = _rel(d_gap_a, d_up, max(abs(d_gap_a), abs(d_up), qk * abs(v_up)))
    return r_v0, r_d0, r_va, r_da
