import math
import os
import subprocess
import sys
import time

import pytest

from exclusion_bounds.errors import DomainError
from exclusion_bounds.exclusion import xi_H, xi_S
from exclusion_bounds.oracle import (
    ANNULUS_DELTA_CERTIFIED,
    annulus_lemma_bound,
    bump_integrals,
    counterexample_crossing,
    counterexample_gap,
    cs_neumann_ground_energy,
    default_bump,
    default_epsilon,
    ll_neumann_ground_energy,
    radial_coulomb_annulus_ground,
)


# -- Lieb-Liniger oracle -----------------------------------------------------

def test_ll_free_case_is_zero():
    assert abs(ll_neumann_ground_energy(0.0, 1.0, n=1000).lambda_min) < 1e-12


def test_ll_dirichlet_limit():
    r = ll_neumann_ground_energy(1e8, 1.0, n=100_000)
    assert abs(r.lambda_min - math.pi ** 2 / 4) < 1e-2


@pytest.mark.parametrize("eta,l", [(0.2, 0.5), (1.0, 1.0), (5.0, 2.0)])
def test_ll_oracle_matches_xi_S(eta, l):
    r = ll_neumann_ground_energy(eta, l, n=100_000)
    assert abs(r.lambda_min * l * l - xi_S(eta * l) ** 2) <= 1e-6
    assert r.residual < 1e-8


def test_ll_scale_invariance():
    base = ll_neumann_ground_energy(2.0, 1.0, n=20_000).lambda_min
    for s in (0.5, 3.0):
        r = ll_neumann_ground_energy(2.0 / s, s, n=20_000)
        assert r.lambda_min * s * s == pytest.approx(base, abs=1e-6)


def test_ll_domain():
    with pytest.raises(DomainError):
        ll_neumann_ground_energy(-1.0, 1.0)
    with pytest.raises(DomainError):
        ll_neumann_ground_energy(1.0, 0.0)
    with pytest.raises(DomainError):
        ll_neumann_ground_energy(1.0, 1.0, n=10)


# -- Calogero-Sutherland oracle ----------------------------------------------

def test_cs_examples():
    assert cs_neumann_ground_energy(1.0, 1.0).lambda_min == pytest.approx(math.pi ** 2 / 4, rel=1e-10)
    assert cs_neumann_ground_energy(1.0, 2.0).lambda_min == pytest.approx(math.pi ** 2 / 16, rel=1e-10)
    assert cs_neumann_ground_energy(2.0, 1.0).lambda_min >= math.pi ** 2 / 4 + 2


@pytest.mark.parametrize("alpha", [1.0, 1.5, 2.0, 5.0, 10.0, 0.75])
def test_cs_oracle_matches_xi_H(alpha):
    lam = cs_neumann_ground_energy(alpha).lambda_min
    assert lam == pytest.approx(xi_H(alpha) ** 2, rel=1e-8)


def test_cs_length_scaling():
    a = cs_neumann_ground_energy(3.0, 1.0).lambda_min
    b = cs_neumann_ground_energy(3.0, 0.37).lambda_min * 0.37 ** 2
    assert b == pytest.approx(a, rel=1e-6)


def test_cs_domain():
    with pytest.raises(DomainError):
        cs_neumann_ground_energy(0.5)
    with pytest.raises(DomainError):
        cs_neumann_ground_energy(2.0, t0=0.5)


# -- annulus -----------------------------------------------------------------

@pytest.mark.parametrize("mu,eps,delta", [
    (1.0, 1.0, 0.5), (1.0, 1.0, 1e-3), (1.0, 1.0, ANNULUS_DELTA_CERTIFIED),
    (1e6, 1.0, 1e-3), (1e9, 2.0, 0.01), (0.05, 0.3, 1e-4), (3.0, 5.0, 1e-5),
])
def test_annulus_lemma(mu, eps, delta):
    lam = radial_coulomb_annulus_ground(mu, eps, delta).lambda_min
    bound = annulus_lemma_bound(mu, eps)
    assert lam >= bound - 1e-2 * abs(bound)


def test_annulus_examples():
    assert radial_coulomb_annulus_ground(1.0, 1.0, 0.5).lambda_min >= -3.0
    assert radial_coulomb_annulus_ground(1e9, 2.0, 0.01).lambda_min >= -1.0 - 1e-2


# -- counterexample ----------------------------------------------------------

def test_bump():
    x, phi = default_bump()
    ints = bump_integrals(x, phi)
    assert ints.grad_sq > 0 and ints.sixth > 0
    with pytest.raises(DomainError):
        bump_integrals(x, 2 * phi)
    with pytest.raises(DomainError):
        bump_integrals(x * 2, phi)


def test_gap_examples():
    lhs, rhs = counterexample_gap(3, 1.0, 0.1)
    assert 0 < lhs < math.inf and 0 < rhs < math.inf
    a = counterexample_gap(2, 1.0, 0.3)
    b = counterexample_gap(2, 1.0, 0.15)
    # at alpha = 1 only the eps^-2 term survives on the left
    assert b[0] / a[0] == pytest.approx(4.0, rel=1e-2)
    with pytest.raises(DomainError):
        counterexample_gap(3, 1.0, 0.4)


def test_crossing():
    r = counterexample_crossing(3, 100)
    assert math.isfinite(r.alpha_star) and 1 < r.alpha_star < 100
    assert r.rhs >= r.lhs_upper
    eps = default_epsilon(3, bump_integrals(*default_bump()))
    assert r.epsilon == eps
    lhs, rhs = counterexample_gap(3, r.alpha_star + 1.0, eps)
    assert rhs > lhs


def test_no_crossing_reports_nan():
    r = counterexample_crossing(3, 1.5)
    assert math.isnan(r.alpha_star)


@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_crossing_runtime_each_backend(backend):
    code = ("import time; from exclusion_bounds.oracle import counterexample_crossing; "
            "counterexample_crossing(3, 2.0); t = time.perf_counter(); "
            "counterexample_crossing(3, 100); print(time.perf_counter() - t)")
    env = dict(os.environ, EXCLUSION_BOUNDS_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    assert float(out.stdout.strip()) < 5.0
