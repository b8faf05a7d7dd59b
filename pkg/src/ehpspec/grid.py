"""Uniform radial grid with Dirichlet walls at both ends."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class GridSpec:
    """``points`` interior nodes r_min + i*h, i = 1..points, h = (r_max - r_min)/(points + 1).

    The wavefunction vanishes at r_min and r_max. The default r_min = 0 puts
    the first node one spacing from the origin, where u(0) = 0 holds.
    """

    r_max: float
    points: int
    r_min: float = 0.0

    def __post_init__(self):
        if self.r_min < 0 or not self.r_max > self.r_min:
            raise DomainError(f"need 0 <= r_min < r_max, got [{self.r_min}, {self.r_max}]")
        if self.points < 3:
            raise DomainError("need at least 3 interior points")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.points + 1)

    @property
    def nodes(self) -> np.ndarray:
        return self.r_min + self.h * np.arange(1, self.points + 1)

    def halved(self) -> "GridSpec":
        """Same interval, half the spacing."""
        return GridSpec(self.r_max, 2 * self.points + 1, self.r_min)
