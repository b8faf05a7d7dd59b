"""Eckart-Hellmann potential, Greene-Aldrich substitutions and the NUFA coefficient map."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError
from .units import PhysicalContext, kinetic_scale


@dataclass(frozen=True)
class PotentialParams:
    """Strengths of the four terms and the screening parameter.

    V(r) = -A x/(1-x) + B x/(1-x)^2 - C/r + D x/r,  x = exp(-alpha r).
    """

    A: float = 0.0
    B: float = 0.0
    C: float = 0.0
    D: float = 0.0
    alpha: float = 1.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError(f"screening parameter must be positive, got {self.alpha}")

    def with_(self, **kw) -> "PotentialParams":
        return replace(self, **kw)


@dataclass(frozen=True)
class DimensionlessParams:
    beta0: float
    beta1: float
    beta2: float
    beta3: float
    gamma: float
    epsilon: float | None = None


@dataclass(frozen=True)
class Affine:
    """p + q*epsilon."""

    p: float
    q: float

    def __call__(self, epsilon: float) -> float:
        return self.p + self.q * epsilon


@dataclass(frozen=True)
class NufaCoefficients:
    alpha1: float
    alpha2: float
    alpha3: float
    xi1: Affine
    xi2: Affine
    xi3: Affine
    # xi1 + xi3 - xi2 formed before the large terms cancel (gamma + beta1)
    barrier: float | None = None


def _check_r(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be positive")
    return r


def potential_value(params: PotentialParams, r):
    """V(r) of the combined potential. Accepts scalars or arrays."""
    r = _check_r(r)
    a = params.alpha
    x = np.exp(-a * r)
    q = x / (-np.expm1(-a * r))
    v = -params.A * q + params.B * q / (-np.expm1(-a * r)) - params.C / r + params.D * x / r
    return v[()] if v.ndim == 0 else v


def ga_inverse_r2(r, alpha: float):
    """Greene-Aldrich replacement for 1/r^2: alpha^2/(1 - exp(-alpha r))^2."""
    r = _check_r(r)
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    v = (alpha / -np.expm1(-alpha * r)) ** 2
    return v[()] if v.ndim == 0 else v


def ga_inverse_r(r, alpha: float):
    """Greene-Aldrich replacement for 1/r: alpha/(1 - exp(-alpha r))."""
    r = _check_r(r)
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    v = alpha / -np.expm1(-alpha * r)
    return v[()] if v.ndim == 0 else v


def dimensionless(params: PotentialParams, ctx: PhysicalContext, l: int) -> DimensionlessParams:
    """Reduce strengths to beta0..beta3 and gamma = l(l+1)."""
    if l < 0 or int(l) != l:
        raise DomainError(f"l must be a non-negative integer, got {l}")
    k = kinetic_scale(ctx, params.alpha)
    a = params.alpha
    return DimensionlessParams(
        beta0=params.A / k,
        beta1=params.B / k,
        beta2=params.C * a / k,
        beta3=params.D * a / k,
        gamma=float(l * (l + 1)),
    )


def to_nufa(d: DimensionlessParams) -> NufaCoefficients:
    # Signs follow from inserting V(r) into (E - V) with x = exp(-alpha r).
    return NufaCoefficients(
        alpha1=1.0,
        alpha2=1.0,
        alpha3=1.0,
        xi1=Affine(d.beta0 - d.beta3, 1.0),
        xi2=Affine(d.beta0 - d.beta1 - d.beta2 - d.beta3, 2.0),
        xi3=Affine(-d.beta2 + d.gamma, 1.0),
        barrier=d.gamma + d.beta1,
    )
