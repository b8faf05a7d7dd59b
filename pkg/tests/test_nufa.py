import math

import pytest

from ehpspec import nufa
from ehpspec.errors import NoBoundState, NotBoundRegime, SupercriticalBarrier
from ehpspec.potential import Affine, NufaCoefficients, PotentialParams, dimensionless, to_nufa
from ehpspec.units import PhysicalContext

HALF = PhysicalContext.natural(1.0, 0.5)


def coeffs(p, ctx=HALF, l=0):
    return to_nufa(dimensionless(p, ctx, l))


def raw(p1=0.0, p2=0.0, p3=0.0, a1=1.0):
    return NufaCoefficients(a1, 1.0, 1.0, Affine(p1, 1.0), Affine(p2, 2.0), Affine(p3, 1.0))


def test_lambda_examples():
    assert nufa.lambda_of(raw(), 0.0) == 0.0
    hell = coeffs(PotentialParams(C=2, D=-1, alpha=0.001))
    assert nufa.lambda_of(hell, 2250500.25) == pytest.approx(1499.5, rel=1e-14)
    assert nufa.lambda_of(raw(p3=2.0, a1=0.0), 0.0) == pytest.approx(2.0)


def test_lambda_negative_discriminant():
    with pytest.raises(NotBoundRegime):
        nufa.lambda_of(raw(p3=-5.0), 1.0)


def test_nu_examples():
    assert nufa.nu_of(raw()) == 1.0
    assert nufa.nu_of(raw(p3=2.0)) == pytest.approx(2.0)  # gamma = 2
    c = to_nufa(dimensionless(PotentialParams(0.01, 0.5, 1, -1, 0.025), PhysicalContext.natural(), 0))
    assert nufa.nu_of(c) == pytest.approx(0.5 + math.sqrt(1600.25), rel=1e-12)
    assert nufa.nu_of(c) == pytest.approx(40.503124878, abs=1e-9)


def test_nu_supercritical():
    c = to_nufa(dimensionless(PotentialParams(B=-1, alpha=0.025), PhysicalContext.natural(), 0))
    with pytest.raises(SupercriticalBarrier):
        nufa.nu_of(c)


def test_quantize_hellmann_ground():
    sol = nufa.quantize(coeffs(PotentialParams(C=2, D=-1, alpha=0.001)), 0)
    assert sol.lam == pytest.approx(1499.5, rel=1e-14)
    assert sol.epsilon == pytest.approx(2250500.25, rel=1e-14)
    assert -sol.epsilon * 1e-6 == pytest.approx(-2.25050025, rel=1e-13)


def test_quantize_hellmann_2s():
    sol = nufa.quantize(coeffs(PotentialParams(C=2, D=-1, alpha=0.01)), 1)
    assert sol.lam == pytest.approx(74.0, rel=1e-14)
    assert sol.epsilon == pytest.approx(5676.0, rel=1e-14)
    assert -sol.epsilon * 1e-4 == pytest.approx(-0.5676, rel=1e-13)


def test_quantize_free_particle_has_no_bound_state():
    with pytest.raises(NoBoundState) as exc:
        nufa.quantize(raw(), 0)
    assert exc.value.s == pytest.approx(-0.5)


def test_hypergeometric_params():
    sol = nufa.quantize(coeffs(PotentialParams(C=2, D=-1, alpha=0.001)), 0)
    a, b, c = nufa.hypergeometric_params(sol)
    assert (a, b, c) == pytest.approx((3001, 0, 3000), abs=1e-9)
    assert c == 1 + 2 * sol.lam


def test_termination_and_identity_over_states():
    c = coeffs(PotentialParams(C=2, D=-1, alpha=0.001))
    for n in range(6):
        sol = nufa.quantize(c, n)
        assert sol.b == pytest.approx(-n, abs=1e-9 * max(1, sol.a))
        assert sol.a + sol.b == pytest.approx(2 * sol.lam + 2 * sol.nu, rel=1e-12)


def test_residuals():
    c = coeffs(PotentialParams(C=2, D=-1, alpha=0.001))
    sol = nufa.quantize(c, 2)
    r6, r7 = nufa.residuals(sol, c)
    assert abs(r6) <= 1e-10 * max(1, abs(c.xi3(sol.epsilon)))
    assert abs(r7) <= 1e-10 * max(1, abs(c.xi1(sol.epsilon)), abs(c.xi2(sol.epsilon)))
    # gamma = 2, beta1 = 0, nu = 2
    sol = nufa.NufaSolution(0, 1.0, 2.0, 1.0 - 2.0, 0, 0, 0)
    _, r7 = nufa.residuals(sol, raw(p3=2.0))
    assert r7 == 0.0
    t1 = to_nufa(dimensionless(PotentialParams(0.01, 0.5, 1, -1, 0.025), PhysicalContext.natural(), 0))
    nu = nufa.nu_of(t1)
    sol = nufa.NufaSolution(0, 0.0, nu, 0.0, 0, 0, 0)
    _, r7 = nufa.residuals(sol, t1)
    assert abs(r7) <= 1e-8 * 1600


def test_monotone_and_finite_spectrum():
    for p in [PotentialParams(C=2, D=-1, alpha=0.05), PotentialParams(A=8, B=0.3, alpha=0.2),
              PotentialParams(D=-3, alpha=0.1)]:
        c = coeffs(p)
        eps = []
        n = 0
        while True:
            try:
                eps.append(nufa.quantize(c, n).epsilon)
            except NoBoundState:
                break
            n += 1
        assert len(eps) >= 1
        assert all(a > b for a, b in zip(eps, eps[1:]))
        nu = nufa.nu_of(c)
        s_next = (c.xi1.p - c.xi3.p - (n + nu) ** 2) / (2 * (n + nu))
        assert s_next <= 0


def test_tiny_alpha_keeps_centrifugal_term():
    ctx = PhysicalContext.natural(0.6, 1.7)
    c = to_nufa(dimensionless(PotentialParams(C=3.3, alpha=1e-15), ctx, 2))
    assert nufa.nu_of(c) == 3.0


def test_hypergeometric_params_trivial():
    # lambda = 0, nu = 1 with sqrt(xi1) = n + nu + lambda = 1
    a, b, c = nufa._hyper_abc(raw(p1=1.0, p2=1.0), 0.0, 1.0, 0.0)
    assert (a, b, c) == (2.0, 0.0, 1.0)
