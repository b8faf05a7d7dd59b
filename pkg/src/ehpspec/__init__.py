"""Bound states of the Eckart-Hellmann potential by the NUFA method, with a finite-difference oracle."""

from .errors import (
    DomainError,
    EHPError,
    NoBoundState,
    NotBelowThreshold,
    NotBoundRegime,
    PoleInSeries,
    QuadratureFailure,
    SupercriticalBarrier,
)
from .potential import PotentialParams, dimensionless, potential_value, to_nufa
from .spectra import (
    EnergyLevel,
    QuantumNumbers,
    Variant,
    coulomb_energy,
    eckart_energy,
    ehp_energy,
    enumerate_bound_states,
    hellmann_energy,
    yukawa_energy,
)
from .units import PhysicalContext, amu_to_ev, kinetic_scale

__version__ = "0.1.0"
