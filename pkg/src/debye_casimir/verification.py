"""Named identity checks run by ``debye-casimir verify``.

Every check reports a relative residual against a relative tolerance and
passes when ``residual <= tol``.  Boolean checks (signs, monotonicity)
report 0 or 1 with tolerance 0.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import correlation as corr
from . import cutoff, oracles, surface, thermo
from .model import DEFAULT_SPEC, PlasmaParameters, QuadratureSpec, make_geometry

__all__ = ["CheckResult", "run_checks", "format_table", "CENTRAL_X", "SWEEP_X"]

CENTRAL_X = (0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
SWEEP_X = tuple(np.r_[0.0, np.logspace(-2, 2, 25)])
BVP_CASES = tuple((qr, x) for qr in (0.1, 1.0, 10.0) for x in (0.0, 1.0, 10.0))
LN2M1 = 2.0 * math.log(2.0) - 1.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: float
    got: float
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tol)

    def as_dict(self):
        d = asdict(self)
        d["passed"] = self.passed
        return d


def _rel(got, expected):
    if expected == 0.0:
        return abs(got)
    return abs(got - expected) / abs(expected)


def _checks(spec: QuadratureSpec):
    unit = PlasmaParameters.from_kappa(1.0, 1.0)
    out = []

    def add(name, expected, got, tol, residual=None):
        res = _rel(got, expected) if residual is None else residual
        out.append([name, float(expected), float(got), float(res), tol])

    # contact kernels
    for kind, kernel in (("force", thermo.kernel_force), ("internal", thermo.kernel_internal),
                         ("free", thermo.kernel_free)):
        ref = oracles.contact_series(kind).value
        add(f"contact_{kind}", ref, kernel(0.0, spec).value, 1e-8)

    # surface route vs Casimir internal energy
    for x in CENTRAL_X:
        g = make_geometry(unit, x)
        both, u_c, res = surface.central_equality(unit, g, spec)
        add(f"surface_eq_casimir(x={x:g})", u_c, both, 1e-8, res)

    u_inf = surface.surface_internal_energy_infinite(unit, spec)
    u_c0 = thermo.casimir_internal_energy(unit, make_geometry(unit, 0.0), spec)
    add("half_energy", -u_c0 / 2.0, u_inf, 1e-8)
    add("half_energy_closed", LN2M1 / (32.0 * math.pi), u_inf, 1e-8)

    for x in (0.1, 1.0):
        add(f"thermo_identity(x={x:g})", 0.0, 0.0, 1e-6,
            thermo.check_thermo_identity(unit, make_geometry(unit, x), spec=spec))
    for x in (0.0, 1.0, 10.0):
        add(f"entropy_identity(x={x:g})", 0.0, 0.0, 1e-8,
            thermo.check_entropy_identity(unit, make_geometry(unit, x), spec, k_B=1.0))
    for x in (0.1, 1.0, 10.0):
        add(f"force_derivative(x={x:g})", 0.0, 0.0, 1e-6,
            thermo.check_force_identity(unit, make_geometry(unit, x), spec=spec))
    for x in (0.1, 1.0, 10.0):
        g = make_geometry(unit, x)
        s = thermo.casimir_entropy(unit, g, spec, k_B=1.0)
        add(f"entropy_kernel(x={x:g})", -0.5 * unit.beta * g.a * thermo.casimir_force(unit, g, spec), s, 1e-12)

    # entropy signs and values
    negative = [x for x in SWEEP_X if thermo.casimir_entropy(unit, make_geometry(unit, x), spec, k_B=1.0) < 0.0]
    add("entropy_nonnegative", 0.0, len(negative), 0.0, float(bool(negative)))
    add("entropy_contact", 0.0, thermo.casimir_entropy(unit, make_geometry(unit, 0.0), spec), 0.0)
    d = 1.0
    s_b = surface.bulk_entropy(unit, d, k_B=1.0)
    rhs = unit.beta * (surface.bulk_internal_energy(unit, d) - surface.bulk_free_energy(unit, d))
    add("bulk_entropy_identity", rhs, s_b, 1e-12)
    add("bulk_entropy_closed", -1.0 / (24.0 * math.pi), s_b, 1e-12)
    add("surface_entropy_zero", 0.0, surface.surface_entropy_infinite(), 0.0)

    # asymptote
    ratios = {}
    for x in (20.0, 50.0, 100.0):
        g = make_geometry(unit, x)
        ratios[x] = thermo.casimir_force(unit, g, spec) / thermo.asymptotic_force(unit, g)
    add("asymptote(x=50)", 1.0, ratios[50.0], 1e-2)
    dev = [abs(ratios[x] - 1.0) for x in (20.0, 50.0, 100.0)]
    add("asymptote_monotone", 0.0, 0.0, 0.0, float(not (dev[0] > dev[1] > dev[2])))

    # bulk energy
    for d in (1.0, 2.5):
        add(f"bulk_energy(d={d:g})", surface.bulk_internal_energy(unit, d),
            surface.bulk_internal_energy(unit, d, spec, method="quadrature"), 1e-10)

    # coefficient ground truth
    worst = 0.0
    for qr in (0.1, 0.3, 1.0, 3.0, 10.0):
        for x in (0.0, 0.1, 1.0, 10.0):
            worst = max(worst, *corr.boundary_residuals(qr, 1.0, x, -0.5))
    add("boundary_residuals", 0.0, worst, 1e-12, worst)

    for qr, x in BVP_CASES:
        sol = oracles.bvp_phi_hat(qr, 1.0, x, -0.5, oracles.GridSpec(points=200))
        ref = corr.phi_hat(sol.z, -0.5, qr, 1.0, x)
        dev = float(np.max(np.abs(sol.phi / ref - 1.0)))
        add(f"bvp_phi_hat(q/k={qr:g},x={x:g})", 0.0, dev, 1e-6, dev)

    qs = np.array([0.1, 0.5, 1.0, 2.0])
    worst = 0.0
    for x in (0.0, 0.1, 0.5, 1.0, 2.0):
        worst = max(worst, float(np.max(np.abs(surface.E_raw(qs, 1.0, x) / surface.E_simplified(qs, 1.0, x) - 1.0))))
    add("E_raw_vs_simplified", 0.0, worst, 1e-12, worst)

    for x in (0.0, 1.0, 10.0):
        g = make_geometry(unit, x)
        add(f"direct_force(x={x:g})", oracles.direct_force_oracle(unit, g, spec), thermo.casimir_force(unit, g, spec), 1e-8)

    # cutoff bridge
    tc = cutoff.cutoff_distance(0.01, 73.0) / cutoff.ANGSTROM
    add("cutoff_distance_angstrom", 0.75, tc, 0.01 / 0.75)
    add("cutoff_time", 2.5e-19, cutoff.cutoff_time(0.01, 73.0), 0.02)
    add("cutoff_prefactor", 6.80e-7, cutoff.cutoff_prefactor(), 0.005 / 6.80)
    sig = np.logspace(0.0, 3.0, 7)
    tau = np.array([cutoff.cutoff_time(0.01, s) for s in sig])
    slope = np.polyfit(np.log(sig), np.log(tau), 1)[0]
    add("cutoff_scaling_exponent", -1.0 / 3.0, slope, 1e-10)
    return out


def run_checks(rel_tol_override: float | None = None, spec: QuadratureSpec = DEFAULT_SPEC) -> list[CheckResult]:
    """Evaluate every check; ``rel_tol_override`` replaces all tolerances."""
    rows = _checks(spec)
    results = []
    for name, expected, got, res, tol in rows:
        if rel_tol_override is not None:
            tol = float(rel_tol_override)
        results.append(CheckResult(name, expected, got, res, tol))
    return results


def format_table(results) -> str:
    head = f"{'check':<34} {'expected':>14} {'got':>14} {'residual':>10} {'tol':>8}  status"
    lines = [head, "-" * len(head)]
    for r in results:
        lines.append(
            f"{r.name:<34} {r.expected:>14.7g} {r.got:>14.7g} {r.residual:>10.2e} {r.tol:>8.1e}  "
            f"{'pass' if r.passed else 'FAIL'}"
        )
    n_fail = sum(not r.passed for r in results)
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    return "\n".join(lines)
