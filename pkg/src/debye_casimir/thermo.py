"""Casimir force, free energy, internal energy and entropy per unit area.

All three reduced kernels are integrals over the hyperbolic mode variable
``t`` (``q = kappa sinh t``) with ``g(t) = 4t + 2x sinh t``::

    I_f(x) = int n(g) sinh^2 t cosh t dt
    I_L(x) = int -ln(1 - exp(-g)) sinh t cosh t dt
    I_U(x) = int n(g) sinh^2 t dt

where ``n(g) = 1/(exp(g) - 1)``.  The dimensional quantities are::

    f        = -kappa^3 / (2 pi beta) I_f
    beta F_c = -kappa^2 / (4 pi)      I_L
    beta U_c = -kappa^2 / (2 pi)      I_U
    S_c      =  k_B a kappa^3 / (4 pi) I_f

Only the electrostatic (zero-frequency TM) polarization contributes in
this classical model; there is no TE term anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import zeta

from .model import DEFAULT_SPEC, PlasmaParameters, QuadratureSpec, SlabGeometry, ValidationError, make_geometry
from .quadrature import IntegralResult, integrate_semi_infinite

__all__ = [
    "K_B",
    "ReducedKernels",
    "occupation",
    "kernel_force",
    "kernel_free",
    "kernel_internal",
    "reduced_kernels",
    "casimir_force",
    "casimir_free_energy",
    "casimir_internal_energy",
    "casimir_entropy",
    "asymptotic_force",
    "check_thermo_identity",
    "check_entropy_identity",
    "check_force_identity",
]

#: Boltzmann constant, erg/K (exact SI value 1.380649e-23 J/K).
K_B = 1.380649e-16


def occupation(g):
    """``exp(-g)/(1 - exp(-g))`` written as ``1/expm1(g)``; 0 where g overflows."""
    with np.errstate(over="ignore", divide="ignore"):
        return 1.0 / np.expm1(g)


def _minus_log_one_minus(g):
    # -ln(1 - exp(-g)), accurate for both small and large g
    with np.errstate(over="ignore", under="ignore", divide="ignore"):
        small = -np.log(-np.expm1(-g))
        large = -np.log1p(-np.exp(-g))
    return np.where(g < math.log(2.0), small, large)


def _g(t, x):
    return 4.0 * t + 2.0 * x * np.sinh(t)


def _check_x(x):
    x = float(x)
    if math.isnan(x) or x < 0.0:
        raise ValidationError("x", x, ">= 0 (inf allowed)")
    return x


@lru_cache(maxsize=4096)
def kernel_force(x: float, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegralResult:
    """``I_f(x)``; 1/12 at contact."""
    x = _check_x(x)
    if math.isinf(x):
        return IntegralResult(0.0, 0.0, 0, 1.0)

    def f(t):
        sh = np.sinh(t)
        return occupation(_g(t, x)) * sh * sh * np.cosh(t)

    return integrate_semi_infinite(f, 1.0, spec)


@lru_cache(maxsize=4096)
def kernel_free(x: float, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegralResult:
    """``I_L(x)``; (2 ln 2 - 1)/4 at contact."""
    x = _check_x(x)
    if math.isinf(x):
        return IntegralResult(0.0, 0.0, 0, 1.0)

    def f(t):
        return _minus_log_one_minus(_g(t, x)) * np.sinh(t) * np.cosh(t)

    return integrate_semi_infinite(f, 1.0, spec)


@lru_cache(maxsize=4096)
def kernel_internal(x: float, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegralResult:
    """``I_U(x)``; (2 ln 2 - 1)/8 at contact."""
    x = _check_x(x)
    if math.isinf(x):
        return IntegralResult(0.0, 0.0, 0, 1.0)

    def f(t):
        sh = np.sinh(t)
        return occupation(_g(t, x)) * sh * sh

    return integrate_semi_infinite(f, 1.0, spec)


@dataclass(frozen=True)
class ReducedKernels:
    x: float
    I_f: float
    I_L: float
    I_U: float
    error_estimate: float

    def as_dict(self):
        return {"x": self.x, "I_f": self.I_f, "I_L": self.I_L, "I_U": self.I_U}


def reduced_kernels(x: float, spec: QuadratureSpec = DEFAULT_SPEC) -> ReducedKernels:
    rf = kernel_force(x, spec)
    rl = kernel_free(x, spec)
    ru = kernel_internal(x, spec)
    err = max(rf.error_estimate, rl.error_estimate, ru.error_estimate)
    return ReducedKernels(float(x), rf.value, rl.value, ru.value, err)


def casimir_force(params: PlasmaParameters, geom: SlabGeometry, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Force per unit area between the half-spaces, dyne/cm^2 (negative: attraction)."""
    k = params.kappa
    return -(k**3) / (2.0 * math.pi * params.beta) * kernel_force(geom.x, spec).value


def casimir_free_energy(params: PlasmaParameters, geom: SlabGeometry, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Free energy per unit area, erg/cm^2, normalized to 0 at infinite separation."""
    return _beta_free(params, geom.x, spec) / params.beta


def _beta_free(params, x, spec):
    return -(params.kappa**2) / (4.0 * math.pi) * kernel_free(x, spec).value


def casimir_internal_energy(params: PlasmaParameters, geom: SlabGeometry, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Internal energy per unit area, erg/cm^2."""
    return -(params.kappa**2) / (2.0 * math.pi * params.beta) * kernel_internal(geom.x, spec).value


def casimir_entropy(params: PlasmaParameters, geom: SlabGeometry, spec: QuadratureSpec = DEFAULT_SPEC,
                    k_B: float = K_B) -> float:
    """Entropy per unit area, erg/K/cm^2.

    Shares the force kernel, so ``S_c = -k_B beta a f / 2`` exactly.  Zero at
    contact and at infinite separation.
    """
    if geom.a == 0.0 or geom.infinite:
        return 0.0
    return k_B * geom.a * params.kappa**3 / (4.0 * math.pi) * kernel_force(geom.x, spec).value


def asymptotic_force(params: PlasmaParameters, geom: SlabGeometry) -> float:
    """Large-gap force ``-zeta(3) / (8 pi beta (a + 2/kappa)^3)``.

    The screening layers act like an extra ``1/kappa`` of gap on each side.
    """
    if geom.infinite:
        return 0.0
    a_eff = geom.a + 2.0 / params.kappa
    return -float(zeta(3.0)) / (8.0 * math.pi * params.beta * a_eff**3)


def check_thermo_identity(params: PlasmaParameters, geom: SlabGeometry, step: float | None = None,
                          spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Relative residual of ``U_c = d(beta F_c)/d beta``.

    The derivative is a central difference in ``beta`` at fixed ``a``,
    ``rho`` and ``q_c``, so ``kappa`` moves as ``sqrt(beta)``.  ``step``
    defaults to ``1e-4 * beta``.
    """
    if geom.infinite:
        return 0.0
    h = 1e-4 * params.beta if step is None else float(step)
    up = params.with_beta(params.beta + h)
    dn = params.with_beta(params.beta - h)
    bf_up = _beta_free(up, up.kappa * geom.a, spec)
    bf_dn = _beta_free(dn, dn.kappa * geom.a, spec)
    deriv = (bf_up - bf_dn) / (2.0 * h)
    u = casimir_internal_energy(params, geom, spec)
    if u == 0.0:
        return abs(deriv)
    return abs(u - deriv) / abs(u)


def check_entropy_identity(params: PlasmaParameters, geom: SlabGeometry, spec: QuadratureSpec = DEFAULT_SPEC,
                           k_B: float = K_B) -> float:
    """Relative residual of ``S_c = k_B beta (U_c - F_c)``.

    Normalized by ``max(|S_c|, k_B beta max(|U_c|, |F_c|))`` so that contact,
    where both sides vanish, is measured against the size of the energies
    being subtracted.
    """
    if geom.infinite:
        return 0.0
    s = casimir_entropy(params, geom, spec, k_B)
    u = casimir_internal_energy(params, geom, spec)
    f = casimir_free_energy(params, geom, spec)
    rhs = k_B * params.beta * (u - f)
    floor = k_B * params.beta * max(abs(u), abs(f))
    return abs(s - rhs) / max(abs(s), floor)


def check_force_identity(params: PlasmaParameters, geom: SlabGeometry, rel_step: float = 1e-4,
                         spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Relative residual of ``f = -dF_c/da`` by central difference in ``a``."""
    if geom.infinite:
        return 0.0
    f = casimir_force(params, geom, spec)
    if geom.a > 0.0:
        h = rel_step * geom.a
        fe_up = casimir_free_energy(params, make_geometry(params, geom.a + h, geom.d), spec)
        fe_dn = casimir_free_energy(params, make_geometry(params, geom.a - h, geom.d), spec)
        deriv = (fe_up - fe_dn) / (2.0 * h)
    else:
        h = rel_step / params.kappa
        vals = [casimir_free_energy(params, make_geometry(params, k * h, geom.d), spec) for k in range(3)]
        deriv = (-3.0 * vals[0] + 4.0 * vals[1] - vals[2]) / (2.0 * h)
    return abs(f + deriv) / abs(f)
