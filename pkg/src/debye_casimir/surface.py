"""Surface-energy bookkeeping from the pair correlation function.

Per transverse mode ``q`` the internal energy is split into z-integrals:

* ``L0`` bulk slab of thickness ``d`` (no surfaces),
* ``L1`` the same slab cut at the surface z = 0,
* ``L2(a)`` the image (``B``) term near the surface,
* ``L3`` one surface's half of the cross-gap (``D``) term.

An energy per unit area follows from
``beta U = -(kappa^4 / (16 pi)) int L q dq``.  The finite-gap change per
surface, ``U_a - U_inf``, is built from the raw ``B(a)``, ``B(inf)`` and
``D`` coefficients, so that comparing twice it with the Casimir internal
energy is a genuine cross-check rather than the same integral twice.

The thickness ``d`` cancels from every surface quantity.  Functions that
accept it do so only to let callers confirm that cancellation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import correlation as corr
from .model import DEFAULT_SPEC, PlasmaParameters, QuadratureSpec, SlabGeometry, ValidationError
from .quadrature import integrate_interval, integrate_semi_infinite
from .thermo import K_B, casimir_internal_energy

__all__ = [
    "SurfaceLedger",
    "energy_prefactor",
    "mode_L_values",
    "L_infinity",
    "E_raw",
    "E_simplified",
    "delta_L",
    "delta_L_closed",
    "surface_ledger",
    "bulk_internal_energy",
    "bulk_free_energy",
    "surface_internal_energy_infinite",
    "surface_delta_kernel",
    "surface_energy_delta",
    "central_equality",
    "free_energy_via_surface",
    "bulk_entropy",
    "kinetic_internal_energy",
    "kinetic_free_energy",
    "kinetic_entropy",
    "surface_free_energy_infinite",
    "surface_entropy_infinite",
]


def energy_prefactor(kappa: float) -> float:
    """``-2 pi / (2 (2 pi)^2) * (kappa^2 / 2)^2``, multiplying ``int L q dq``."""
    return -2.0 * math.pi / (2.0 * (2.0 * math.pi) ** 2) * (kappa**2 / 2.0) ** 2


def _check_q(q):
    q = np.asarray(q, dtype=float)
    if np.any(~np.isfinite(q)) or np.any(q <= 0.0):
        raise ValidationError("q", q, "finite and > 0")
    return q


def mode_L_values(q, kappa: float, a: float, d: float = 1.0):
    """``(L0, L1, L2a, L3)`` at transverse wavenumber(s) ``q``."""
    q = _check_q(q)
    q_kappa = np.hypot(q, kappa)
    s = q_kappa + q
    L0 = 2.0 * d / (q_kappa * q * s)
    L1 = L0 - 1.0 / (q_kappa * q * s**2)
    L2a = corr.B_coefficient(q, kappa, a) / (q_kappa * q * s)
    L3 = corr.D_at_gap(q, kappa, a) / (q * s**2)
    return L0, L1, L2a, L3


def L_infinity(q, kappa: float, d: float = 1.0):
    """Isolated-surface excess ``L1 - L0 + L2(inf)``; negative."""
    L0, L1, L2inf, _ = mode_L_values(q, kappa, math.inf, d)
    return L1 - L0 + L2inf


def E_raw(q, kappa: float, a: float):
    """``(q_kappa + q)[B(a) - B(inf)] + q_kappa D exp(-(q_kappa + q) a)`` from the coefficient functions."""
    q = _check_q(q)
    q_kappa = np.hypot(q, kappa)
    b_a = corr.B_coefficient(q, kappa, a)
    b_inf = corr.B_coefficient(q, kappa, math.inf)
    return (q_kappa + q) * (b_a - b_inf) + q_kappa * corr.D_at_gap(q, kappa, a)


def E_simplified(q, kappa: float, a: float):
    """Reduced form ``(q/q_kappa)(1 - A) exp(-2qa) / (1 - A exp(-2qa))``."""
    q = _check_q(q)
    q_kappa = np.hypot(q, kappa)
    if math.isinf(a):
        return np.zeros_like(q)
    log_A = corr.log_reflection_A(q, kappa)
    return (q / q_kappa) * -np.expm1(log_A) * np.exp(-2.0 * q * a) / -np.expm1(log_A - 2.0 * q * a)


def delta_L(q, kappa: float, a: float):
    """``L_a - L_inf = E / (q_kappa q (q_kappa + q)^2)`` with the raw ``E``."""
    q = _check_q(q)
    q_kappa = np.hypot(q, kappa)
    return E_raw(q, kappa, a) / (q_kappa * q * (q_kappa + q) ** 2)


def delta_L_closed(q, kappa: float, a: float):
    """``(4q / (kappa^4 q_kappa)) n(g)`` with ``exp(-g) = A exp(-2qa)``."""
    q = _check_q(q)
    q_kappa = np.hypot(q, kappa)
    if math.isinf(a):
        return np.zeros_like(q)
    g = -corr.log_reflection_A(q, kappa) + 2.0 * q * a
    return 4.0 * q / (kappa**4 * q_kappa) * np.exp(-g) / -np.expm1(-g)


@dataclass(frozen=True)
class SurfaceLedger:
    """Mode-resolved L integrals at one ``q`` and the energies per unit area."""

    q: float
    L0: float
    L1: float
    L2a: float
    L2inf: float
    L3: float
    Linf: float
    dLa: float
    E: float
    U_b: float
    U_inf: float
    dU_a: float


def surface_ledger(params: PlasmaParameters, geom: SlabGeometry, q: float,
                   spec: QuadratureSpec = DEFAULT_SPEC) -> SurfaceLedger:
    k = params.kappa
    L0, L1, L2a, L3 = (float(v) for v in mode_L_values(q, k, geom.a, geom.d))
    L2inf = float(mode_L_values(q, k, math.inf, geom.d)[2])
    return SurfaceLedger(
        q=float(q), L0=L0, L1=L1, L2a=L2a, L2inf=L2inf, L3=L3,
        Linf=L1 - L0 + L2inf,
        dLa=float(delta_L(q, k, geom.a)),
        E=float(E_raw(q, k, geom.a)),
        U_b=bulk_internal_energy(params, geom.d),
        U_inf=surface_internal_energy_infinite(params, spec),
        dU_a=surface_energy_delta(params, geom, spec),
    )


def _mode_integral(L_of_q, kappa, spec):
    """``int_0^inf L(q) q dq`` under ``q = kappa sinh t`` (``dq = q_kappa dt``)."""

    def f(t):
        q = kappa * np.sinh(t)
        out = np.zeros_like(t)
        pos = q > 0.0
        out[pos] = L_of_q(q[pos]) * q[pos] * kappa * np.cosh(t[pos])
        return out

    return integrate_semi_infinite(f, 1.0, spec)


def bulk_internal_energy(params: PlasmaParameters, d: float, spec: QuadratureSpec = DEFAULT_SPEC,
                         method: str = "closed") -> float:
    """Debye-Hueckel bulk energy per unit area, ``beta U_b = -kappa^3 d / (8 pi)``.

    ``method="quadrature"`` integrates the ``L0`` mode sum instead of using
    the closed form.
    """
    k = params.kappa
    if method == "closed":
        return -(k**3) * d / (8.0 * math.pi) / params.beta
    if method == "quadrature":
        res = _mode_integral(lambda q: mode_L_values(q, k, math.inf, d)[0], k, spec)
        return energy_prefactor(k) * res.value / params.beta
    raise ValueError(f"unknown method {method!r}")


def bulk_free_energy(params: PlasmaParameters, d: float) -> float:
    """``beta F_b = -kappa^3 d / (12 pi)``; integrates the bulk energy with kappa^2 ~ beta."""
    return -(params.kappa**3) * d / (12.0 * math.pi) / params.beta


def surface_internal_energy_infinite(params: PlasmaParameters, spec: QuadratureSpec = DEFAULT_SPEC,
                                     d: float = 1.0) -> float:
    """Excess internal energy of one isolated surface, erg/cm^2 (positive).

    Closed form ``kappa^2 (2 ln 2 - 1) / (32 pi beta)``, independent of
    temperature at fixed density and charge.
    """
    k = params.kappa
    res = _mode_integral(lambda q: L_infinity(q, k, d), k, spec)
    return energy_prefactor(k) * res.value / params.beta


def surface_delta_kernel(x: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Reduced ``-(4 pi / kappa^2) beta (U_a - U_inf)`` at ``kappa = 1, a = x``."""
    x = float(x)
    if math.isinf(x):
        return 0.0
    res = _mode_integral(lambda q: delta_L(q, 1.0, x), 1.0, spec)
    return -4.0 * math.pi * energy_prefactor(1.0) * res.value


def surface_energy_delta(params: PlasmaParameters, geom: SlabGeometry, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """``U_a - U_inf`` for ONE surface, erg/cm^2.  Twice this is the Casimir internal energy."""
    if geom.infinite:
        return 0.0
    k = params.kappa
    res = _mode_integral(lambda q: delta_L(q, k, geom.a), k, spec)
    return energy_prefactor(k) * res.value / params.beta


def central_equality(params: PlasmaParameters, geom: SlabGeometry, spec: QuadratureSpec = DEFAULT_SPEC):
    """``(2 (U_a - U_inf), U_c, relative residual)``."""
    both = 2.0 * surface_energy_delta(params, geom, spec)
    u_c = casimir_internal_energy(params, geom, spec)
    if u_c == 0.0 and both == 0.0:
        return both, u_c, 0.0
    return both, u_c, abs(both - u_c) / abs(u_c)


def free_energy_via_surface(params: PlasmaParameters, geom: SlabGeometry, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Free energy recovered by integrating the surface internal energy over temperature.

    With ``U = d(beta F)/d beta`` and ``kappa^2 ~ beta``, and ``beta F -> 0``
    as ``beta -> 0``::

        beta F = -(1 / (pi a^2)) int_0^x y J(y) dy

    where ``J`` is :func:`surface_delta_kernel` (both surfaces counted).
    Compare with :func:`debye_casimir.thermo.casimir_free_energy`.
    """
    if geom.infinite:
        return 0.0
    x = geom.x
    if x == 0.0:
        raise ValidationError("a", geom.a, "> 0 for the temperature integration")
    inner = integrate_interval(lambda y: y * surface_delta_kernel(y, spec), 0.0, x, spec)
    beta_f = -(params.kappa**2) / (math.pi * x**2) * inner.value
    return beta_f / params.beta


def bulk_entropy(params: PlasmaParameters, d: float, k_B: float = K_B) -> float:
    """``S_b = -k_B kappa^3 d / (24 pi)``.

    Carries the slab thickness ``d``; that is what ``k_B beta (U_b - F_b)``
    gives with ``beta F_b = -kappa^3 d / (12 pi)``.
    """
    return -k_B * params.kappa**3 * d / (24.0 * math.pi)


def kinetic_internal_energy(params: PlasmaParameters, d: float) -> float:
    return 1.5 * params.rho * d / params.beta


def kinetic_free_energy(params: PlasmaParameters, d: float, reference_const: float = 0.0, k_B: float = K_B) -> float:
    """``F_k = (3/2) rho d ln(beta) / beta + c / beta``.

    ``c`` is fixed by the entropy constant ``reference_const`` so that
    ``S_k = k_B beta (U_k - F_k)`` holds: ``c = (3/2) rho d - reference_const / k_B``.
    """
    n = 1.5 * params.rho * d
    c = n - reference_const / k_B
    return (n * math.log(params.beta) + c) / params.beta


def kinetic_entropy(params: PlasmaParameters, d: float, reference_const: float = 0.0, k_B: float = K_B) -> float:
    """``S_k = -(3/2) k_B rho d ln(beta) + reference_const``; unbounded below as T -> 0.

    The additive constant is convention dependent (it absorbs the density
    dependence); it defaults to 0.
    """
    return -1.5 * k_B * params.rho * d * math.log(params.beta) + reference_const


def surface_free_energy_infinite(params: PlasmaParameters, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Equal to the internal energy, since ``U_inf`` does not depend on temperature."""
    return surface_internal_energy_infinite(params, spec)


def surface_entropy_infinite() -> float:
    return 0.0
