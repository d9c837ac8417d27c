"""Independent ground truth for the analytic pipeline.

* :func:`bvp_phi_hat` integrates the screened Poisson equation in z
  numerically, from both truncated ends towards the source, and matches
  the two solutions with the unit delta-source jump.
* :func:`contact_series` sums the contact (a = 0) kernels term by term
  after expanding ``1/(1 - exp(-4t))`` as a geometric series.
* :func:`direct_force_oracle` integrates the force over ``q`` directly,
  without the hyperbolic substitution, using scipy's QUADPACK wrapper
  rather than this package's quadrature.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .correlation import coefficients
from .model import DEFAULT_SPEC, DomainError, PlasmaParameters, QuadratureSpec, SlabGeometry, ValidationError
from .quadrature import IntegralResult, sum_series

__all__ = [
    "BvpAccuracyError",
    "GridSpec",
    "BvpSolution",
    "required_half_width",
    "bvp_phi_hat",
    "contact_series",
    "direct_force_oracle",
]


class BvpAccuracyError(ArithmeticError):
    """The truncated domain is too small for the requested accuracy."""


@dataclass(frozen=True)
class GridSpec:
    """Sampling and solver settings for :func:`bvp_phi_hat`.

    Either pass explicit output points ``z`` or a range ``z_min, z_max``
    with ``points`` samples; the default range spans a few decay lengths
    around the source and the gap.  ``half_width`` is the truncation ``Z``
    of the computational domain [-Z, Z]; ``None`` picks the minimum
    allowed.  ``method`` is ``"exponential"`` (exact propagation inside
    each homogeneous layer) or ``"rk4"`` (classical Runge-Kutta with step
    at most ``step``).
    """

    z: tuple | None = None
    z_min: float | None = None
    z_max: float | None = None
    points: int = 200
    half_width: float | None = None
    method: str = "exponential"
    step: float = 0.05


@dataclass(frozen=True)
class BvpSolution:
    z: np.ndarray
    phi: np.ndarray
    matching_residual: float
    jump: float
    half_width: float
    end_values: tuple = field(default=(0.0, 0.0))


def required_half_width(q: float, kappa: float, a: float, z0: float) -> float:
    """Smallest admissible truncation ``Z``: 10 slowest decay lengths beyond source and gap."""
    q_kappa = math.hypot(q, kappa)
    gap = 0.0 if math.isinf(a) else a
    return 10.0 / min(q, q_kappa) + abs(z0) + gap


def _layers(q, kappa, a, uniform):
    q_kappa = math.hypot(q, kappa)

    def k_of(zmid):
        if uniform:
            return q_kappa
        return q if 0.0 < zmid < a else q_kappa

    return k_of


def _exact_step(phi, dphi, k, h):
    ch = math.cosh(k * h)
    sh = math.sinh(k * h)
    return phi * ch + dphi * sh / k, phi * k * sh + dphi * ch


def _rk4_step(phi, dphi, k, h, max_step):
    n = max(1, math.ceil(abs(h) / max_step))
    dh = h / n
    k2 = k * k
    for _ in range(n):
        a1, b1 = dphi, k2 * phi
        a2, b2 = dphi + 0.5 * dh * b1, k2 * (phi + 0.5 * dh * a1)
        a3, b3 = dphi + 0.5 * dh * b2, k2 * (phi + 0.5 * dh * a2)
        a4, b4 = dphi + dh * b3, k2 * (phi + dh * a3)
        phi = phi + dh / 6.0 * (a1 + 2 * a2 + 2 * a3 + a4)
        dphi = dphi + dh / 6.0 * (b1 + 2 * b2 + 2 * b3 + b4)
    return phi, dphi


def _march(start, stop, outputs, breaks, k_of, method, step):
    """Integrate from ``start`` towards ``stop`` starting on the decaying solution.

    Returns (phi, dphi, log_scale) at ``stop`` and dictionaries of the same
    at each requested output point.  The state is renormalized to keep it
    finite; ``log_scale`` records the accumulated factor.
    """
    direction = 1.0 if stop > start else -1.0
    k0 = k_of(start)
    phi, dphi = 1.0, direction * k0
    log_scale = 0.0
    stops = sorted({*breaks, *outputs, stop}, reverse=direction < 0)
    stops = [s for s in stops if (s - start) * direction > 0 and (stop - s) * direction >= 0]
    samples = {}
    z = start
    for nxt in stops:
        k = k_of(0.5 * (z + nxt))
        h = nxt - z
        if method == "exponential":
            phi, dphi = _exact_step(phi, dphi, k, h)
        else:
            phi, dphi = _rk4_step(phi, dphi, k, h, step)
        big = max(abs(phi), abs(dphi))
        if big > 1e100:
            phi /= big
            dphi /= big
            log_scale += math.log(big)
        z = nxt
        samples[nxt] = (phi, dphi, log_scale)
    return (phi, dphi, log_scale), samples


def bvp_phi_hat(q: float, kappa: float, a: float, z0: float, grid: GridSpec | None = None,
                uniform: bool = False) -> BvpSolution:
    """Numerically solve ``(d^2/dz^2 - q^2 - kappa_z^2) phi = -4 pi delta(z - z0)``.

    ``kappa_z`` is ``kappa`` in the plasma (z < 0 and z > a) and 0 in the
    gap; ``uniform=True`` fills the gap too.  Beyond the truncation points
    the medium is homogeneous, so the solution there is started as the
    exact decaying exponential.

    Raises
    ------
    BvpAccuracyError
        If ``grid.half_width`` is below :func:`required_half_width`.
    """
    q = float(q)
    kappa = float(kappa)
    a = float(a)
    z0 = float(z0)
    if not z0 < 0.0:
        raise DomainError(f"z0={z0!r}: source must lie in the lower medium (z0 < 0)")
    if not (q > 0.0 and kappa > 0.0 and a >= 0.0):
        raise ValidationError("(q, kappa, a)", (q, kappa, a), "q > 0, kappa > 0, a >= 0")
    grid = grid or GridSpec()
    if grid.method not in ("exponential", "rk4"):
        raise ValidationError("method", grid.method, "'exponential' or 'rk4'")
    need = required_half_width(q, kappa, a, z0)
    Z = need if grid.half_width is None else float(grid.half_width)
    if Z < need * (1.0 - 1e-12):
        raise BvpAccuracyError(
            f"half_width={Z:.6g} below required {need:.6g} "
            f"(10/min(q, q_kappa) + |z0| + a); decay at the ends would be under 10 e-folds"
        )

    if grid.z is not None:
        z_out = np.asarray(grid.z, dtype=float)
    else:
        q_kappa = math.hypot(q, kappa)
        lo = grid.z_min if grid.z_min is not None else z0 - 3.0 / q_kappa
        top = (0.0 if math.isinf(a) else a) + 3.0 / min(q, q_kappa)
        hi = grid.z_max if grid.z_max is not None else top
        z_out = np.linspace(lo, hi, grid.points)
    if np.any(np.abs(z_out) > Z):
        raise BvpAccuracyError("output grid extends beyond the truncated domain")

    k_of = _layers(q, kappa, a, uniform)
    breaks = [0.0] if uniform or a == 0.0 else ([0.0] if math.isinf(a) else [0.0, a])
    left_pts = [float(v) for v in z_out if v < z0]
    right_pts = [float(v) for v in z_out if v > z0]
    breaks_left = [b for b in breaks if b < z0]
    breaks_right = [b for b in breaks if b > z0]

    (pl, dl, sl), samp_l = _march(-Z, z0, left_pts, breaks_left, k_of, grid.method, grid.step)
    (pr, dr, sr), samp_r = _march(Z, z0, right_pts, breaks_right, k_of, grid.method, grid.step)

    # value continuity and derivative jump -4 pi at the source
    ell = dl / pl
    r = dr / pr
    v0 = 4.0 * math.pi / (ell - r)

    phi = np.empty_like(z_out)
    for i, zi in enumerate(z_out):
        if zi < z0:
            p, _, s = samp_l[float(zi)]
            phi[i] = v0 * p / pl * math.exp(s - sl)
        elif zi > z0:
            p, _, s = samp_r[float(zi)]
            phi[i] = v0 * p / pr * math.exp(s - sr)
        else:
            phi[i] = v0

    slope_left = v0 * ell
    slope_right = v0 * r
    jump = slope_right - slope_left
    matching = abs(jump + 4.0 * math.pi) / (4.0 * math.pi)
    end_left = v0 / pl * math.exp(-sl)
    end_right = v0 / pr * math.exp(-sr)
    return BvpSolution(z=z_out, phi=phi, matching_residual=matching, jump=jump, half_width=Z,
                       end_values=(end_left, end_right))


_CONTACT_TERMS = {
    # int_0^inf exp(-4nt) sinh^2 t cosh t dt, with sinh^2 cosh = (cosh 3t - cosh t)/4
    "force": lambda n: 8.0 * n / ((16.0 * n * n - 9.0) * (16.0 * n * n - 1.0)),
    # int_0^inf exp(-4nt) sinh^2 t dt, partial fractions
    "internal": lambda n: 0.125 * (1.0 / (2.0 * n - 1.0) - 1.0 / n + 1.0 / (2.0 * n + 1.0)),
    # (1/n) int_0^inf exp(-4nt) sinh t cosh t dt, from -ln(1 - y) = sum y^n / n
    "free": lambda n: 1.0 / (4.0 * n * (2.0 * n - 1.0) * (2.0 * n + 1.0)),
}


def contact_series(kind: str, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegralResult:
    """Contact value of a reduced kernel as a tail-bounded series.

    ``kind`` is ``"force"`` (1/12), ``"internal"`` ((2 ln 2 - 1)/8) or
    ``"free"`` ((2 ln 2 - 1)/4).
    """
    try:
        term = _CONTACT_TERMS[kind]
    except KeyError:
        raise ValidationError("kind", kind, f"one of {sorted(_CONTACT_TERMS)}") from None
    return sum_series(term, spec)


def direct_force_oracle(params: PlasmaParameters, geom: SlabGeometry, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Force per unit area from the q-space integral

    ``f = -(kappa^4 / (8 pi beta)) int_0^inf D exp(-(q_kappa + q) a) q / (q_kappa + q)^2 dq``

    with ``D`` taken from :func:`debye_casimir.correlation.coefficients`.
    """
    if geom.infinite:
        return 0.0
    k = params.kappa
    a = geom.a

    def integrand(q):
        c = coefficients(q, k, a)
        s = c.q_kappa + q
        return c.D * math.exp(-s * a) * q / s**2

    tol = dict(epsabs=0.0, epsrel=min(spec.rel_tol, 1e-11), limit=500)
    head, _ = integrate.quad(integrand, 0.0, k, **tol)
    tail, _ = integrate.quad(integrand, k, math.inf, **tol)
    return -(k**4) / (8.0 * math.pi * params.beta) * (head + tail)
