"""Radial bound-state wavefunctions u(r) = N x^lam (1-x)^nu 2F1(-n, n+2lam+2nu; 1+2lam; x)."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace

import numpy as np

from . import nufa
from .errors import DomainError, PoleInSeries, QuadratureFailure
from .grid import GridSpec
from .potential import PotentialParams, dimensionless, to_nufa
from .spectra import QuantumNumbers, Variant
from .units import PhysicalContext, kinetic_scale

log = logging.getLogger(__name__)


def _as_termination(b) -> int:
    n = -b
    if abs(n - round(n)) > 1e-9 * max(1.0, abs(n)) or round(n) < 0:
        raise DomainError(f"b = {b} is not a non-positive integer; series does not terminate")
    return int(round(n))


def terminating_coeffs(a: float, b, c: float) -> np.ndarray:
    """Coefficients (a)_k (b)_k / ((c)_k k!) for k = 0..n, with b = -n."""
    n = _as_termination(b)
    if c <= 0 and float(c).is_integer() and -c <= n:
        raise PoleInSeries(f"c = {c} is a non-positive integer within the series length {n}")
    coeffs = np.empty(n + 1)
    t = 1.0
    coeffs[0] = t
    for k in range(n):
        t *= (a + k) * (-n + k) / ((c + k) * (k + 1))
        coeffs[k + 1] = t
    return coeffs


def gauss_2f1_terminating(a: float, b, c: float, x):
    """2F1(a, -n; c; x) as a degree-n polynomial in x."""
    coeffs = terminating_coeffs(a, b, c)
    return np.polynomial.polynomial.polyval(x, coeffs)


@dataclass(frozen=True)
class RadialWavefunction:
    params: PotentialParams
    qn: QuantumNumbers
    ctx: PhysicalContext
    lam: float
    nu: float
    epsilon: float
    poly_coeffs: tuple[float, ...]
    log_norm: float = 0.0

    @property
    def norm(self) -> float:
        return math.exp(self.log_norm)

    @property
    def energy(self) -> float:
        return -kinetic_scale(self.ctx, self.params.alpha) * self.epsilon

    def _log_abs_sign(self, r):
        r = np.asarray(r, dtype=float)
        a = self.params.alpha
        with np.errstate(divide="ignore"):
            log_w = -self.lam * a * r + self.nu * np.log(-np.expm1(-a * r))
            p = np.polynomial.polynomial.polyval(np.exp(-a * r), self.poly_coeffs)
            return log_w + np.log(np.abs(p)), np.sign(p)

    def __call__(self, r):
        """u(r); safe for exponents in the thousands."""
        lg, sg = self._log_abs_sign(r)
        out = sg * np.exp(lg + self.log_norm)
        return out[()] if np.ndim(out) == 0 else out

    def second_derivative(self, r):
        """d^2u/dr^2 from the closed form, by the chain rule through x = exp(-alpha r)."""
        r = np.asarray(r, dtype=float)
        a, lam, nu = self.params.alpha, self.lam, self.nu
        x = np.exp(-a * r)
        q = 1.0 / np.expm1(a * r)  # x/(1-x)
        c = np.polynomial.polynomial
        p0 = c.polyval(x, self.poly_coeffs)
        p1 = c.polyval(x, c.polyder(self.poly_coeffs))
        p2 = c.polyval(x, c.polyder(self.poly_coeffs, 2))
        xg = lam - nu * q
        a0 = -lam - nu * q * q + xg * xg + xg
        a1 = x * (2.0 * xg + 1.0)
        log_w = -lam * a * r + nu * np.log(-np.expm1(-a * r)) + self.log_norm
        out = a * a * np.exp(log_w) * (a0 * p0 + a1 * p1 + x * x * p2)
        return out[()] if out.ndim == 0 else out

    def node_positions(self) -> np.ndarray:
        """Radii of the zeros of u, from the real roots of the polynomial factor in (0, 1)."""
        if len(self.poly_coeffs) < 2:
            return np.empty(0)
        roots = np.polynomial.polynomial.polyroots(self.poly_coeffs)
        real = roots[np.abs(roots.imag) < 1e-9 * np.maximum(1.0, np.abs(roots))].real
        inside = real[(real > 0) & (real < 1)]
        return np.sort(-np.log(inside) / self.params.alpha)


def build_wavefunction(
    params: PotentialParams,
    qn: QuantumNumbers,
    ctx: PhysicalContext,
    variant: Variant = Variant.REDERIVED,
) -> RadialWavefunction:
    """Unnormalised u(r) (norm 1) for a bound state; raises NoBoundState otherwise."""
    if Variant(variant) is not Variant.REDERIVED:
        raise DomainError("wavefunctions exist only for the rederived quantization")
    coeffs = to_nufa(dimensionless(params, ctx, qn.l))
    sol = nufa.quantize(coeffs, qn.n)
    a = qn.n + 2.0 * sol.lam + 2.0 * sol.nu
    poly = terminating_coeffs(a, -qn.n, 1.0 + 2.0 * sol.lam)
    return RadialWavefunction(params, qn, ctx, sol.lam, sol.nu, sol.epsilon, tuple(poly))


def _support(wf: RadialWavefunction, tail: float = 1e-16) -> tuple[float, float, float]:
    """(r_peak, r_hi, log|u| at peak) with u^2 below tail*peak^2 beyond r_hi."""
    a = wf.params.alpha
    x_star = wf.lam / (wf.lam + wf.nu)
    r_star = -math.log(x_star) / a
    nodes = wf.node_positions()
    r_hi = max(2.0 * r_star, 2.0 * nodes[-1] if nodes.size else 0.0)
    for _ in range(200):
        r = np.linspace(0.0, r_hi, 4001)[1:]
        lg, _ = wf._log_abs_sign(r)
        peak = np.max(lg)
        if lg[-1] < peak + 0.5 * math.log(tail) and r_hi > (nodes[-1] if nodes.size else 0.0):
            i = int(np.argmax(lg))
            return float(r[i]), r_hi, float(peak)
        r_hi *= 2.0
    raise QuadratureFailure("could not bracket the wavefunction tail")


def _simpson(f, lo: float, hi: float, rtol: float, max_halvings: int = 24) -> float:
    m = 16
    r = np.linspace(lo, hi, m + 1)
    y = f(r)
    h = (hi - lo) / m
    prev = h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())
    for _ in range(max_halvings):
        mid = f(r[:-1] + 0.5 * h)
        y_new = np.empty(2 * m + 1)
        y_new[0::2] = y
        y_new[1::2] = mid
        y, m, h = y_new, 2 * m, 0.5 * h
        r = np.linspace(lo, hi, m + 1)
        cur = h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())
        if abs(cur - prev) <= rtol * abs(cur):
            return cur
        prev = cur
    raise QuadratureFailure(f"Simpson did not converge on [{lo}, {hi}] after {max_halvings} halvings")


def norm_integral(wf: RadialWavefunction, rtol: float = 1e-10) -> float:
    """Integral of u^2 over (0, inf)."""
    r_peak, r_hi, peak = _support(wf)
    ref = 2.0 * (peak + wf.log_norm)

    def integrand(r):
        out = np.zeros_like(r)
        pos = r > 0
        lg, _ = wf._log_abs_sign(r[pos])
        out[pos] = np.exp(2.0 * (lg + wf.log_norm) - ref)
        return out

    total = _simpson(integrand, 0.0, r_peak, rtol) + _simpson(integrand, r_peak, r_hi, rtol)
    return total * math.exp(ref)


def normalize(wf: RadialWavefunction, rtol: float = 1e-10) -> RadialWavefunction:
    """Return wf scaled so that the integral of u^2 is one."""
    r_peak, r_hi, peak = _support(wf)
    shifted = replace(wf, log_norm=-peak)
    total = norm_integral(shifted, rtol)
    return replace(wf, log_norm=-peak - 0.5 * math.log(total))


def count_nodes(wf: RadialWavefunction, grid: GridSpec, max_refine: int = 10) -> int:
    """Strict sign changes of u on the open interval (r_min, r_max) sampled on grid.

    The grid is refined while it misses zeros the polynomial factor is known
    to have inside the interval.
    """
    expected = wf.node_positions()
    expected = expected[(expected > grid.r_min) & (expected < grid.r_max)]
    g = grid
    for _ in range(max_refine + 1):
        _, sg = wf._log_abs_sign(g.nodes)
        sg = sg[sg != 0]
        changes = int(np.count_nonzero(sg[1:] != sg[:-1]))
        if changes >= expected.size:
            return changes
        g = g.halved()
    log.warning("grid too coarse: %d sign changes for %d zeros", changes, expected.size)
    return changes


def ode_residual(wf: RadialWavefunction, r) -> tuple[np.ndarray, np.ndarray]:
    """(u'' - (V_eff - E) u / (hbar^2/2mu), u'') for the Greene-Aldrich radial equation."""
    from .oracle import Mode, effective_potential

    r = np.asarray(r, dtype=float)
    upp = wf.second_derivative(r)
    v = effective_potential(wf.params, wf.qn.l, wf.ctx, Mode.GREENE_ALDRICH, r)
    rhs = (v - wf.energy) / wf.ctx.hbar2_over_2mu * wf(r)
    return upp - rhs, upp
