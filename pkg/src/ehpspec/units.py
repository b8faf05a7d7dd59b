"""Unit conventions: natural (hbar, mu dimensionless) and physical (eV, Angstrom)."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError

AMU_MEV = 931.494028
HBAR_C_EV_ANGSTROM = 1973.29


class Mode(str, enum.Enum):
    NATURAL = "natural"
    PHYSICAL = "physical"


@dataclass(frozen=True)
class PhysicalContext:
    """Mass and action conventions for a calculation.

    In physical mode ``mu`` holds the rest-mass energy mu*c^2 in eV and
    ``hbar_c`` is in eV*Angstrom; energies come out in eV and lengths are
    Angstrom. In natural mode ``hbar`` and ``mu`` are plain numbers.
    """

    mode: Mode = Mode.NATURAL
    hbar: float = 1.0
    mu: float = 1.0
    hbar_c: float = HBAR_C_EV_ANGSTROM

    def __post_init__(self):
        if not (self.mu > 0 and self.hbar > 0 and self.hbar_c > 0):
            raise DomainError("hbar, mu and hbar_c must be positive")

    @classmethod
    def natural(cls, hbar: float = 1.0, mu: float = 1.0) -> "PhysicalContext":
        return cls(Mode.NATURAL, hbar=hbar, mu=mu)

    @classmethod
    def physical(cls, mu_ev: float, hbar_c: float = HBAR_C_EV_ANGSTROM) -> "PhysicalContext":
        return cls(Mode.PHYSICAL, mu=mu_ev, hbar_c=hbar_c)

    @property
    def hbar2_over_2mu(self) -> float:
        """hbar^2/(2 mu): energy*length^2 in physical mode."""
        if self.mode is Mode.PHYSICAL:
            return self.hbar_c**2 / (2.0 * self.mu)
        return self.hbar**2 / (2.0 * self.mu)


def amu_to_ev(mass_amu: float) -> float:
    """Rest-mass energy in eV of a mass given in atomic mass units."""
    if not mass_amu > 0:
        raise DomainError(f"mass must be positive, got {mass_amu}")
    return mass_amu * AMU_MEV * 1e6


def kinetic_scale(ctx: PhysicalContext, alpha: float) -> float:
    """hbar^2 alpha^2 / (2 mu), the energy unit that makes the beta's dimensionless."""
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    return ctx.hbar2_over_2mu * alpha * alpha
