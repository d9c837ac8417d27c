"""Casimir force and energies of two Debye-Hueckel half-spaces.

Walks from the contact values to the large-gap limit in reduced units
(kappa = beta = 1).  Run with ``python3 demos/01_casimir_kernels.py``.
"""
import math

import numpy as np
from scipy.special import zeta

from debye_casimir import thermo
from debye_casimir.model import PlasmaParameters, make_geometry

unit = PlasmaParameters.from_kappa(1.0, 1.0)

# At contact the kernels have closed forms
k0 = thermo.reduced_kernels(0.0)
ln2m1 = 2 * math.log(2) - 1
print("I_f(0) =", k0.I_f, " 1/12 =", 1 / 12)
print("I_U(0) =", k0.I_U, " (2ln2-1)/8 =", ln2m1 / 8)
print("I_L(0) =", k0.I_L, " (2ln2-1)/4 =", ln2m1 / 4)

# Force, free energy, internal energy, entropy over a log grid of gaps
xs = np.r_[0.0, np.logspace(-2, 2, 9)]
print(f"\n{'x':>8} {'f':>12} {'F_c':>12} {'U_c':>12} {'S_c/k_B':>12}")
for x in xs:
    g = make_geometry(unit, x)
    f = thermo.casimir_force(unit, g)
    F = thermo.casimir_free_energy(unit, g)
    U = thermo.casimir_internal_energy(unit, g)
    S = thermo.casimir_entropy(unit, g, k_B=1.0)
    print(f"{x:8.3g} {f:12.5e} {F:12.5e} {U:12.5e} {S:12.5e}")

# The entropy is positive for every finite gap and zero at contact.
# It is the force kernel again: S_c = -beta a f / 2.

# Far apart, the screening layers act like an extra 1/kappa of gap per side
print("\nlarge-gap ratio f / [-zeta(3)/(8 pi beta (a+2/kappa)^3)]")
for x in (5.0, 20.0, 50.0, 100.0):
    g = make_geometry(unit, x)
    print(f"  x={x:5.0f}  ratio-1 = {thermo.casimir_force(unit, g) / thermo.asymptotic_force(unit, g) - 1:.3e}")
print("zeta(3) =", float(zeta(3)))
