"""Surface tension and the time-splitting cutoff.

Balancing the cutoff term of the dilute dielectric-ball Casimir force
against the Laplace stress 2 sigma / a fixes the cutoff distance.  This is
a dimensional illustration only.
"""
import numpy as np

from debye_casimir import cutoff

tc = cutoff.cutoff_distance(0.01, 73.0)  # water-air tension, dyne/cm
print(f"prefactor (hbar c / 32 pi)^(1/3) = {cutoff.cutoff_prefactor():.4e}")
print(f"tau c = {tc:.4e} cm = {tc / cutoff.ANGSTROM:.3f} Angstrom")
print(f"tau   = {cutoff.cutoff_time(0.01, 73.0):.3e} s")

# tau ~ sigma^(-1/3), whatever the radius
sigma = np.logspace(0, 3, 4)
tau = np.array([cutoff.cutoff_time(0.01, s) for s in sigma])
print("\nsigma:", sigma)
print("tau  :", tau)
print("log-log slope:", np.polyfit(np.log(sigma), np.log(tau), 1)[0])

ball = cutoff.BallParameters(epsilon_minus_1=0.01, a_ball=1e-3, sigma=73.0, delta=tc / 1e-3)
print("\nball force density:", cutoff.milton_surface_force(ball), "dyne/cm^2 (inward)")
print("Laplace stress     :", cutoff.surface_tension_stress(73.0, 1e-3))
