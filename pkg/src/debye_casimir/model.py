"""Domain types and the reduced representation used by every other module.

Everything is in Gaussian (cgs/esu) units.  Physics kernels are computed as
functions of the reduced gap ``x = kappa * a`` only; dimensional prefactors
are applied by the wrappers in :mod:`debye_casimir.thermo` and
:mod:`debye_casimir.surface`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "ValidationError",
    "DomainError",
    "PlasmaParameters",
    "SlabGeometry",
    "ModePoint",
    "QuadratureSpec",
    "make_parameters",
    "make_geometry",
    "mode_point",
]


class ValidationError(ValueError):
    """An input parameter is non-finite or outside its allowed range."""

    def __init__(self, field_name: str, value, requirement: str):
        self.field = field_name
        self.value = value
        super().__init__(f"{field_name}={value!r}: must be {requirement}")


class DomainError(ValueError):
    """A point lies outside the domain where a quantity is defined."""


def _positive(name: str, value) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise ValidationError(name, value, "a real number") from None
    if not math.isfinite(v) or v <= 0.0:
        raise ValidationError(name, value, "finite and > 0")
    return v


@dataclass(frozen=True)
class PlasmaParameters:
    """One-component plasma at low density.

    Parameters
    ----------
    beta : float
        Inverse temperature 1/(k_B T), 1/erg.
    rho : float
        Number density, 1/cm^3.
    q_c : float
        Ionic charge, esu.

    ``kappa`` (inverse Debye length, 1/cm) is derived once, at construction,
    from ``kappa**2 = 4 pi beta q_c**2 rho``.
    """

    beta: float
    rho: float
    q_c: float
    kappa: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "beta", _positive("beta", self.beta))
        object.__setattr__(self, "rho", _positive("rho", self.rho))
        object.__setattr__(self, "q_c", _positive("q_c", self.q_c))
        kappa = math.sqrt(4.0 * math.pi * self.beta * self.q_c**2 * self.rho)
        object.__setattr__(self, "kappa", kappa)

    @classmethod
    def from_kappa(cls, beta: float, kappa: float, q_c: float = 1.0) -> "PlasmaParameters":
        """Build parameters with a prescribed screening wavenumber.

        The density is back-solved so that the derived ``kappa`` matches the
        request to rounding.
        """
        beta = _positive("beta", beta)
        kappa = _positive("kappa", kappa)
        q_c = _positive("q_c", q_c)
        rho = kappa**2 / (4.0 * math.pi * beta * q_c**2)
        return cls(beta, rho, q_c)

    def with_beta(self, beta: float) -> "PlasmaParameters":
        """Same density and charge at another temperature (kappa rescales as sqrt(beta))."""
        return PlasmaParameters(beta, self.rho, self.q_c)


@dataclass(frozen=True)
class SlabGeometry:
    """Two half-spaces of plasma separated by a vacuum gap.

    ``a`` may be ``math.inf`` (isolated surfaces).  ``d`` is the thickness
    of the slab used for bulk bookkeeping; surface quantities never depend
    on it.
    """

    a: float
    d: float
    x: float

    @property
    def infinite(self) -> bool:
        return math.isinf(self.a)


def make_parameters(beta: float, rho: float, q_c: float) -> PlasmaParameters:
    return PlasmaParameters(beta, rho, q_c)


def make_geometry(params: PlasmaParameters, a: float, d: float = 1.0) -> SlabGeometry:
    try:
        a = float(a)
    except (TypeError, ValueError):
        raise ValidationError("a", a, "a real number") from None
    if math.isnan(a) or a < 0.0:
        raise ValidationError("a", a, ">= 0 (inf allowed)")
    d = _positive("d", d)
    return SlabGeometry(a=a, d=d, x=params.kappa * a)


@dataclass(frozen=True)
class ModePoint:
    """Transverse mode expressed through the hyperbolic substitution variable ``t``."""

    t: float
    q: float
    q_kappa: float
    A: float
    g: float


def mode_point(params: PlasmaParameters, geom: SlabGeometry, t: float) -> ModePoint:
    """Evaluate ``q = kappa sinh t`` and the derived quantities at ``t``.

    ``A = exp(-4t)`` equals ``((q_kappa - q)/(q_kappa + q))**2`` and
    ``g = 4t + 2 x sinh t`` is the exponent of the gap propagator.
    """
    t = float(t)
    if not math.isfinite(t) or t < 0.0:
        raise DomainError(f"t={t!r}: substitution variable must be finite and >= 0")
    kappa = params.kappa
    sh = math.sinh(t)
    if geom.infinite:
        g = 0.0 if sh == 0.0 else math.inf
    else:
        g = 4.0 * t + 2.0 * geom.x * sh
    return ModePoint(t=t, q=kappa * sh, q_kappa=kappa * math.cosh(t), A=math.exp(-4.0 * t), g=g)


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances for :func:`debye_casimir.quadrature.integrate_semi_infinite`.

    ``truncation_margin`` is the number of extra e-folds of the decay
    envelope kept beyond the point where the tail drops under ``abs_tol``.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    truncation_margin: float = 5.0

    def __post_init__(self):
        _positive("rel_tol", self.rel_tol)
        _positive("abs_tol", self.abs_tol)
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise ValidationError("max_subdivisions", self.max_subdivisions, "an integer >= 1")
        if not math.isfinite(self.truncation_margin) or self.truncation_margin < 0.0:
            raise ValidationError("truncation_margin", self.truncation_margin, "finite and >= 0")


DEFAULT_SPEC = QuadratureSpec()
