"""Closed-form bound-state energies of the Eckart-Hellmann potential and its reductions."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import nufa
from .errors import DomainError, NoBoundState, NotBelowThreshold, SupercriticalBarrier
from .potential import PotentialParams, dimensionless, to_nufa
from .units import PhysicalContext, kinetic_scale

_LETTERS = "spdfghiklmnoqrtuv"


class Variant(str, enum.Enum):
    REDERIVED = "rederived"
    AS_PRINTED = "as-printed"


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int

    def __post_init__(self):
        if self.n < 0 or self.l < 0 or int(self.n) != self.n or int(self.l) != self.l:
            raise DomainError(f"quantum numbers must be non-negative integers, got {self}")

    @property
    def principal(self) -> int:
        return self.n + self.l + 1

    @property
    def label(self) -> str:
        return f"{self.principal}{_LETTERS[self.l]}"

    @classmethod
    def from_label(cls, label: str) -> "QuantumNumbers":
        """Parse a spectroscopic label such as '1S', '3d' or '4f'."""
        label = label.strip()
        try:
            big_n = int(label[:-1])
            l = _LETTERS.index(label[-1].lower())
        except (ValueError, IndexError):
            raise DomainError(f"bad state label {label!r}") from None
        n = big_n - l - 1
        if n < 0:
            raise DomainError(f"state label {label!r} has l >= N")
        return cls(n, l)


@dataclass(frozen=True)
class EnergyLevel:
    qn: QuantumNumbers
    energy: float
    variant: Variant
    s: float
    bound: bool
    threshold: float = 0.0


def threshold(params: PotentialParams, l: int, ctx: PhysicalContext) -> float:
    """Large-r limit of the Greene-Aldrich effective potential: -C alpha + K l(l+1)."""
    k = kinetic_scale(ctx, params.alpha)
    return -params.C * params.alpha + k * l * (l + 1)


def _delta(n: int, beta1: float, gamma: float) -> float:
    rad = 0.25 + beta1 + gamma
    if rad < 0:
        raise SupercriticalBarrier(f"1/4 + beta1 + gamma = {rad:.6g} < 0")
    return n + 0.5 + math.sqrt(rad)


def ehp_energy(
    params: PotentialParams,
    qn: QuantumNumbers,
    ctx: PhysicalContext,
    variant: Variant = Variant.REDERIVED,
) -> EnergyLevel:
    """Energy of state (n, l) in the full potential.

    The rederived variant goes through the NUFA quantization. The printed
    variant transcribes the published closed form term by term, including
    its standalone -A and +beta1 terms.
    """
    variant = Variant(variant)
    d = dimensionless(params, ctx, qn.l)
    k = kinetic_scale(ctx, params.alpha)
    e_th = threshold(params, qn.l, ctx)
    if variant is Variant.AS_PRINTED:
        delta = _delta(qn.n, d.beta1, d.gamma)
        num = delta**2 - d.beta0 + d.beta1 - d.beta2 + d.beta3 + d.gamma
        energy = k * d.gamma - params.A - params.C * params.alpha - 0.25 * k * (num / delta) ** 2
        s = -num / (2.0 * delta)
        return EnergyLevel(qn, energy, variant, s, s > 0 and energy < e_th, e_th)

    coeffs = to_nufa(d)
    try:
        sol = nufa.quantize(coeffs, qn.n)
        s, eps, bound = sol.s, sol.epsilon, True
    except NotBelowThreshold:
        delta = qn.n + nufa.nu_of(coeffs)
        s = (coeffs.xi1.p - coeffs.xi3.p - delta * delta) / (2.0 * delta)
        eps, bound = s * s - coeffs.xi3.p, False
    return EnergyLevel(qn, -k * eps, variant, s, bound, e_th)


def hellmann_energy(
    C: float, D: float, alpha: float, qn: QuantumNumbers, ctx: PhysicalContext
) -> EnergyLevel:
    """A = B = 0: screened Coulomb plus Yukawa. Both variants coincide."""
    p = PotentialParams(C=C, D=D, alpha=alpha)
    d = dimensionless(p, ctx, qn.l)
    k = kinetic_scale(ctx, alpha)
    delta = qn.n + 0.5 + math.sqrt(0.25 + d.gamma)
    s = (d.beta2 - d.beta3 - d.gamma - delta**2) / (2.0 * delta)
    if not s > 0:
        raise NoBoundState(qn.n, s)
    num = delta**2 - d.beta2 + d.beta3 + d.gamma
    energy = k * d.gamma - C * alpha - 0.25 * k * (num / delta) ** 2
    return EnergyLevel(qn, energy, Variant.REDERIVED, s, energy < 0, threshold(p, qn.l, ctx))


def eckart_energy(
    A: float,
    B: float,
    alpha: float,
    qn: QuantumNumbers,
    ctx: PhysicalContext,
    variant: Variant = Variant.REDERIVED,
) -> EnergyLevel:
    """C = D = 0. Exact (no Greene-Aldrich error) for l = 0."""
    variant = Variant(variant)
    p = PotentialParams(A=A, B=B, alpha=alpha)
    d = dimensionless(p, ctx, qn.l)
    k = kinetic_scale(ctx, alpha)
    delta = _delta(qn.n, d.beta1, d.gamma)
    e_th = k * d.gamma
    if variant is Variant.AS_PRINTED:
        num = delta**2 - d.beta0 + d.beta1 + d.gamma
        energy = k * d.gamma - A - 0.25 * k * (num / delta) ** 2
        s = -num / (2.0 * delta)
        return EnergyLevel(qn, energy, variant, s, s > 0 and energy < e_th, e_th)
    s = (d.beta0 - d.gamma - delta**2) / (2.0 * delta)
    if not s > 0:
        raise NoBoundState(qn.n, s)
    energy = k * d.gamma - 0.25 * k * ((d.beta0 - d.gamma - delta**2) / delta) ** 2
    return EnergyLevel(qn, energy, variant, s, energy < 0, e_th)


def coulomb_energy(C: float, qn: QuantumNumbers, ctx: PhysicalContext) -> EnergyLevel:
    """Hydrogenic -mu C^2 / (2 hbar^2 N^2), N = n + l + 1."""
    if not C > 0:
        raise NoBoundState(qn.n)
    big_n = qn.principal
    energy = -C * C / (4.0 * ctx.hbar2_over_2mu * big_n * big_n)
    return EnergyLevel(qn, energy, Variant.REDERIVED, math.inf, True, 0.0)


def yukawa_energy(D: float, alpha: float, qn: QuantumNumbers, ctx: PhysicalContext) -> EnergyLevel:
    """A = B = C = 0. Needs D < 0 with -beta3 > gamma + delta^2."""
    p = PotentialParams(D=D, alpha=alpha)
    d = dimensionless(p, ctx, qn.l)
    k = kinetic_scale(ctx, alpha)
    delta = qn.n + 0.5 + math.sqrt(0.25 + d.gamma)
    s = (-d.beta3 - d.gamma - delta**2) / (2.0 * delta)
    if not s > 0:
        raise NoBoundState(qn.n, s)
    energy = k * d.gamma - 0.25 * k * ((delta**2 + d.beta3 + d.gamma) / delta) ** 2
    return EnergyLevel(qn, energy, Variant.REDERIVED, s, energy < 0, k * d.gamma)


def enumerate_bound_states(
    params: PotentialParams,
    l: int,
    ctx: PhysicalContext,
    variant: Variant = Variant.REDERIVED,
    n_max_cap: int = 100,
) -> list[EnergyLevel]:
    """Levels n = 0, 1, ... up to the last bound one (or the cap), ascending in energy."""
    if n_max_cap < 0:
        raise DomainError("n_max_cap must be non-negative")
    levels: list[EnergyLevel] = []
    for n in range(n_max_cap + 1):
        try:
            lev = ehp_energy(params, QuantumNumbers(n, l), ctx, variant)
        except (NoBoundState, SupercriticalBarrier):
            break
        if not lev.bound or (levels and lev.energy <= levels[-1].energy):
            break
        levels.append(lev)
    return levels
