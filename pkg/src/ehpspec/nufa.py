"""Parametric NUFA engine: exponents, quantization and hypergeometric parameters.

The radial equation in x = exp(-alpha r) is brought to the form

    u'' + (a1 - a2 x)/(x (1 - a3 x)) u' + (-xi1 x^2 + xi2 x - xi3)/(x^2 (1 - a3 x)^2) u = 0

and solved with u = x^lam (1 - x)^nu f(x), f a Gauss hypergeometric function.
Bound states require the series for f to terminate (b = -n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NoBoundState, NotBelowThreshold, NotBoundRegime, SupercriticalBarrier
from .potential import NufaCoefficients


@dataclass(frozen=True)
class NufaSolution:
    n: int
    lam: float
    nu: float
    epsilon: float
    a: float
    b: float
    c: float

    @property
    def s(self) -> float:
        return self.lam


def _require_unit(coeffs: NufaCoefficients):
    if not (coeffs.alpha1 == coeffs.alpha2 == coeffs.alpha3 == 1.0):
        raise DomainError("only alpha1 = alpha2 = alpha3 = 1 is supported")
    if not (coeffs.xi1.q == coeffs.xi3.q == 1.0 and coeffs.xi2.q == 2.0):
        raise DomainError("xi1 + xi3 - xi2 must be independent of epsilon")


def lambda_of(coeffs: NufaCoefficients, epsilon: float) -> float:
    """Non-negative root of lam(lam - 1) + a1 lam - xi3 = 0."""
    a1 = coeffs.alpha1
    disc = (1.0 - a1) ** 2 + 4.0 * coeffs.xi3(epsilon)
    if disc < 0:
        raise NotBoundRegime(f"xi3 = {coeffs.xi3(epsilon):.6g} gives a complex exponent")
    return 0.5 * (1.0 - a1) + 0.5 * math.sqrt(disc)


def _nu_radicand(coeffs: NufaCoefficients) -> tuple[float, float]:
    a1, a2, a3 = coeffs.alpha1, coeffs.alpha2, coeffs.alpha3
    lin = a3 + a1 * a3 - a2
    # xi1/a3 - xi2 + a3 xi3; epsilon parts cancel
    k = coeffs.xi1.p / a3 - coeffs.xi2.p + a3 * coeffs.xi3.p
    if coeffs.barrier is not None and a1 == a2 == a3 == 1.0:
        # summing the p's loses gamma once beta2 reaches ~1e15
        k = coeffs.barrier
    eps_part = coeffs.xi1.q / a3 - coeffs.xi2.q + a3 * coeffs.xi3.q
    if eps_part != 0.0:
        raise DomainError("nu depends on epsilon; affine cancellation failed")
    return lin, lin * lin + 4.0 * a3 * k


def nu_of(coeffs: NufaCoefficients) -> float:
    """Root nu >= 1/2 of the r -> 0 indicial condition."""
    lin, rad = _nu_radicand(coeffs)
    if rad < 0:
        raise SupercriticalBarrier(f"1 + 4(gamma + beta1) = {rad:.6g} < 0")
    return (lin + math.sqrt(rad)) / (2.0 * coeffs.alpha3)


def _hyper_abc(coeffs: NufaCoefficients, lam: float, nu: float, epsilon: float):
    a1, a2, a3 = coeffs.alpha1, coeffs.alpha2, coeffs.alpha3
    shift = lam + nu + a2 / a3 - 1.0
    root = math.sqrt((a2 / a3 - 1.0) ** 2 + max(coeffs.xi1(epsilon), 0.0) / a3)
    sq = math.sqrt(a3)
    return sq * (shift + root), sq * (shift - root), a1 + 2.0 * lam


def quantize(coeffs: NufaCoefficients, n: int) -> NufaSolution:
    """Energy parameter epsilon for radial quantum number n.

    Termination b = -n reads sqrt(xi1(eps)) = n + nu + sqrt(xi3(eps)). With
    s = sqrt(xi3) this is linear in s:

        s = (p1 - p3 - delta^2) / (2 delta),  delta = n + nu,
        eps = s^2 - p3.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n}")
    _require_unit(coeffs)
    nu = nu_of(coeffs)
    delta = n + nu
    s = (coeffs.xi1.p - coeffs.xi3.p - delta * delta) / (2.0 * delta)
    if not s > 0:
        raise NoBoundState(n, s)
    eps = s * s - coeffs.xi3.p
    if not eps > 0:
        raise NotBelowThreshold(f"epsilon = {eps:.6g} <= 0 at n={n}")
    lam = lambda_of(coeffs, eps)
    a, b, c = _hyper_abc(coeffs, lam, nu, eps)
    return NufaSolution(n=int(n), lam=lam, nu=nu, epsilon=eps, a=a, b=b, c=c)


def hypergeometric_params(sol: NufaSolution) -> tuple[float, float, float]:
    return sol.a, sol.b, sol.c


def residuals(sol: NufaSolution, coeffs: NufaCoefficients) -> tuple[float, float]:
    """Residuals of the two conditions that make the NUFA equation hypergeometric."""
    a1, a2, a3 = coeffs.alpha1, coeffs.alpha2, coeffs.alpha3
    lam, nu, eps = sol.lam, sol.nu, sol.epsilon
    r6 = lam * (lam - 1.0) + a1 * lam - coeffs.xi3(eps)
    r7 = (
        a2 * nu
        - a1 * a3 * nu
        + nu * (nu - 1.0) * a3
        - coeffs.xi1(eps) / a3
        + coeffs.xi2(eps)
        - coeffs.xi3(eps) * a3
    )
    return r6, r7
