"""Casimir force and surface tension of a classical one-component plasma.

Two plasma half-spaces separated by a vacuum gap attract through
correlated charge fluctuations.  In Debye-Hueckel theory the force, free
energy, internal energy and entropy per unit area are one-parameter
families in the reduced gap ``x = kappa a``.  The work done by the force
when the gap closes equals the surface free energy of the two exposed
surfaces; :mod:`debye_casimir.surface` computes that surface energy
independently from the pair correlation function.
"""
from .model import (
    DomainError,
    ModePoint,
    PlasmaParameters,
    QuadratureSpec,
    SlabGeometry,
    ValidationError,
    make_geometry,
    make_parameters,
    mode_point,
)
from .quadrature import ConvergenceError, IntegralResult, integrate_semi_infinite, sum_series
from .correlation import SlabCoefficients, boundary_residuals, coefficients, phi_hat
from .thermo import (
    K_B,
    ReducedKernels,
    asymptotic_force,
    casimir_entropy,
    casimir_force,
    casimir_free_energy,
    casimir_internal_energy,
    check_entropy_identity,
    check_thermo_identity,
    reduced_kernels,
)
from .surface import (
    bulk_entropy,
    bulk_internal_energy,
    central_equality,
    kinetic_entropy,
    surface_energy_delta,
    surface_entropy_infinite,
    surface_internal_energy_infinite,
)
from .cutoff import BallParameters, cutoff_distance, cutoff_time, milton_surface_force
from .oracles import bvp_phi_hat, contact_series, direct_force_oracle

__version__ = "0.1.0"
