import math

import mpmath
import numpy as np
import pytest

from ehpspec.errors import DomainError, NoBoundState, PoleInSeries
from ehpspec.grid import GridSpec
from ehpspec.oracle import effective_potential
from ehpspec.potential import PotentialParams
from ehpspec.spectra import QuantumNumbers, Variant
from ehpspec.units import PhysicalContext
from ehpspec.wavefunctions import (
    build_wavefunction,
    count_nodes,
    gauss_2f1_terminating,
    norm_integral,
    normalize,
    ode_residual,
    terminating_coeffs,
)

HALF = PhysicalContext.natural(1.0, 0.5)


def test_terminating_coeffs_examples():
    np.testing.assert_allclose(terminating_coeffs(3.0, -2, 1.5), [1, -4, 3.2], rtol=1e-15)


def test_terminating_series_against_mpmath():
    rng = np.random.default_rng(7)
    for _ in range(50):
        n = int(rng.integers(0, 8))
        a = float(rng.uniform(0.5, 40))
        c = float(rng.uniform(1.0, 30))
        x = float(rng.uniform(0, 1))
        ref = float(mpmath.hyp2f1(-n, a, c, x))
        got = gauss_2f1_terminating(a, -n, c, x)
        scale = sum(abs(float(mpmath.rf(-n, k) * mpmath.rf(a, k) / (mpmath.rf(c, k) * mpmath.factorial(k)))) * x**k
                    for k in range(n + 1))
        assert abs(got - ref) <= 1e-12 * scale


def test_series_length_and_vanishing_next_term():
    coeffs = terminating_coeffs(7.5, -4, 2.25)
    assert len(coeffs) == 5
    # the (n+1)-th term of the untruncated series carries (b + n) = 0
    assert (-4 + 4) * coeffs[-1] == 0.0


def test_pole_in_series():
    with pytest.raises(PoleInSeries):
        terminating_coeffs(2.0, -3, -1.0)
    with pytest.raises(PoleInSeries):
        terminating_coeffs(2.0, -3, -3.0)
    with pytest.raises(PoleInSeries):
        terminating_coeffs(2.0, -3, 0.0)


def test_non_integer_b_rejected():
    with pytest.raises(DomainError):
        terminating_coeffs(2.0, -1.5, 1.0)


def test_printed_variant_has_no_wavefunction():
    with pytest.raises(DomainError):
        build_wavefunction(PotentialParams(C=2, D=-1, alpha=0.1), QuantumNumbers(0, 0), HALF,
                           Variant.AS_PRINTED)


def test_unbound_state_raises():
    with pytest.raises(NoBoundState):
        build_wavefunction(PotentialParams(C=2, D=-1, alpha=0.1), QuantumNumbers(9, 0), HALF)


CASES = [
    (PotentialParams(C=2, D=-1, alpha=0.001), QuantumNumbers(0, 0)),
    (PotentialParams(C=2, D=-1, alpha=0.05), QuantumNumbers(2, 1)),
    (PotentialParams(C=2, D=-1, alpha=0.01), QuantumNumbers(3, 2)),
    (PotentialParams(A=5, B=0.5, alpha=0.2), QuantumNumbers(1, 0)),
    (PotentialParams(A=1, B=0.001, C=4, D=-4, alpha=0.025), QuantumNumbers(4, 0)),
]


@pytest.mark.parametrize("p, qn", CASES)
def test_normalization_and_nodes(p, qn):
    wf = normalize(build_wavefunction(p, qn, HALF))
    assert norm_integral(wf) == pytest.approx(1.0, abs=1e-9)
    assert wf.node_positions().size == qn.n
    r_max = 20 * max(wf.node_positions().max(initial=0), 1 / p.alpha if p.A else 1.0)
    assert count_nodes(wf, GridSpec(r_max, 200)) == qn.n


@pytest.mark.parametrize("p, qn", CASES)
def test_ode_residual_small(p, qn):
    wf = normalize(build_wavefunction(p, qn, HALF))
    nodes = wf.node_positions()
    hi = 3 * max(nodes.max(initial=0.0), -math.log(wf.lam / (wf.lam + wf.nu)) / p.alpha)
    r = np.linspace(hi / 2000, hi, 2000)
    res, upp = ode_residual(wf, r)
    v = effective_potential(p, qn.l, HALF, "ga", r)
    scale = np.max(np.abs(upp)) + np.max(np.abs((v - wf.energy) * wf(r))) / HALF.hbar2_over_2mu
    assert np.max(np.abs(res)) <= 1e-8 * scale


def test_second_derivative_matches_finite_difference():
    wf = normalize(build_wavefunction(PotentialParams(C=2, D=-1, alpha=0.05), QuantumNumbers(2, 1), HALF))
    r = np.linspace(0.5, 30, 200)
    h = 1e-3
    fd = (wf(r + h) - 2 * wf(r) + wf(r - h)) / h**2
    np.testing.assert_allclose(wf.second_derivative(r), fd, atol=1e-6 * np.max(np.abs(fd)))


def test_wavefunction_vanishes_at_ends():
    wf = normalize(build_wavefunction(PotentialParams(C=2, D=-1, alpha=0.05), QuantumNumbers(0, 0), HALF))
    assert abs(wf(1e-8)) < 1e-6
    assert abs(wf(500.0)) < 1e-30


def test_coarse_grid_is_refined():
    wf = build_wavefunction(PotentialParams(C=2, D=-1, alpha=0.01), QuantumNumbers(4, 0), HALF)
    assert count_nodes(wf, GridSpec(100.0, 3)) == 4


def test_series_two_summation_orders():
    # 2F1(-2, 3; 2; 0.5) = 1 - 3 * 0.5 + (3 * 4 / (2 * 3)) * 0.25
    direct = 1 - 3 * 0.5 + 12 / 6 * 0.25
    coeffs = terminating_coeffs(3.0, -2, 2.0)
    forward = sum(c * 0.5**k for k, c in enumerate(coeffs))
    horner = gauss_2f1_terminating(3.0, -2, 2.0, 0.5)
    assert abs(forward - horner) <= 1e-15
    assert horner == pytest.approx(direct, abs=1e-15)


def test_n0_series_is_one():
    for a, c, x in [(1.0, 2.0, 0.3), (50.0, 0.5, 0.99)]:
        assert gauss_2f1_terminating(a, 0, c, x) == 1.0


def test_small_r_slope_is_nu():
    wf = build_wavefunction(PotentialParams(C=2, D=-1, alpha=0.05), QuantumNumbers(0, 2), HALF)
    r1, r2 = 1e-6, 1e-5
    slope = (math.log(abs(wf(r2))) - math.log(abs(wf(r1)))) / math.log(r2 / r1)
    assert slope == pytest.approx(wf.nu, rel=1e-3)


def test_normalize_is_projective():
    wf = build_wavefunction(PotentialParams(C=2, D=-1, alpha=0.05), QuantumNumbers(1, 0), HALF)
    from dataclasses import replace

    doubled = replace(wf, log_norm=wf.log_norm + math.log(2.0))
    r = np.linspace(0.1, 20, 50)
    np.testing.assert_allclose(normalize(doubled)(r), normalize(wf)(r), rtol=1e-10)


def test_hellmann_1s_and_2s():
    p = PotentialParams(C=2, D=-1, alpha=0.001)
    one_s = normalize(build_wavefunction(p, QuantumNumbers(0, 0), HALF))
    assert one_s.lam == pytest.approx(1499.5) and one_s.nu == 1.0
    assert norm_integral(one_s) == pytest.approx(1.0, abs=1e-10)
    assert count_nodes(one_s, GridSpec(40.0, 2000)) == 0
    two_s = build_wavefunction(p, QuantumNumbers(1, 0), HALF)
    assert count_nodes(two_s, GridSpec(60.0, 2000)) == 1
