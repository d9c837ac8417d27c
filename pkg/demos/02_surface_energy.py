"""The Casimir energy as surface energy.

Builds the surface energy of two facing plasma surfaces from the screened
pair correlation, mode by mode, and compares it with the Casimir internal
energy computed from the force kernels.
"""
import math

import numpy as np

from debye_casimir import correlation, surface, thermo
from debye_casimir.model import PlasmaParameters, make_geometry

unit = PlasmaParameters.from_kappa(1.0, 1.0)

# One mode: coefficients of the piecewise potential and their boundary checks
q, a, z0 = 0.75, 1.0, -0.5
c = correlation.coefficients(q, 1.0, a)
print("A, B, D =", c.A, c.B, c.D)
print("boundary residuals:", correlation.boundary_residuals(q, 1.0, a, z0))

z = np.linspace(-3, 4, 8)
print("phi_hat on a grid:", np.round(correlation.phi_hat(z, z0, q, 1.0, a), 6))

# Bulk energy, closed form vs mode integral
print("\nbeta U_b (closed)    =", surface.bulk_internal_energy(unit, 1.0))
print("beta U_b (quadrature)=", surface.bulk_internal_energy(unit, 1.0, method="quadrature"))

# A single surface: exactly minus half the Casimir energy at contact
u_inf = surface.surface_internal_energy_infinite(unit)
u_c0 = thermo.casimir_internal_energy(unit, make_geometry(unit, 0.0))
print("\nU_inf        =", u_inf)
print("-U_c(0)/2    =", -u_c0 / 2)
print("closed form  =", (2 * math.log(2) - 1) / (32 * math.pi))

# Finite gap: twice the one-surface change equals U_c
print(f"\n{'x':>6} {'2(U_a-U_inf)':>16} {'U_c':>16} {'rel':>9}")
for x in (0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
    both, u_c, res = surface.central_equality(unit, make_geometry(unit, x))
    print(f"{x:6.1f} {both:16.10e} {u_c:16.10e} {res:9.1e}")

# Integrating the surface energy over temperature recovers the free energy
for x in (0.5, 2.0):
    g = make_geometry(unit, x)
    print(f"x={x}: F via surface = {surface.free_energy_via_surface(unit, g):.10e}, "
          f"F_c = {thermo.casimir_free_energy(unit, g):.10e}")
