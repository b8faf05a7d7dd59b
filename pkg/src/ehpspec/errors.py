"""Exception hierarchy for spectrum and wavefunction construction."""


class EHPError(Exception):
    """Base class for all package errors."""


class DomainError(EHPError, ValueError):
    """An argument lies outside the domain of the operation."""


class NotBoundRegime(EHPError):
    """The exponent at large r has no real non-negative root."""


class SupercriticalBarrier(EHPError):
    """1 + 4(gamma + beta1) < 0, so the small-r exponent is complex."""


class NoBoundState(EHPError):
    """The quantization condition has no solution with s > 0 at this n."""

    def __init__(self, n: int, s: float | None = None):
        self.n = n
        self.s = s
        msg = f"no bound state at n={n}"
        if s is not None:
            msg += f" (s={s:.6g})"
        super().__init__(msg)


class NotBelowThreshold(EHPError):
    """A formal solution exists but its energy is not negative (epsilon <= 0)."""


class PoleInSeries(EHPError):
    """The terminating hypergeometric series hits a pole in (c)_k."""


class QuadratureFailure(EHPError):
    """Composite Simpson did not reach the requested tolerance."""


class CatalogError(EHPError, ValueError):
    """Malformed or invalid molecule catalog entry."""
