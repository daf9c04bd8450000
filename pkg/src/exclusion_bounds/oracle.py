"""Brute-force eigenvalue solvers used to cross-check the closed forms.

The solvers here share no code path with :mod:`exclusion` beyond the Bessel
kernels used by ``xi_H`` inside :func:`counterexample_gap`:

* :func:`ll_neumann_ground_energy`: finite differences for the delta
  interaction problem.
* :func:`cs_neumann_ground_energy`: series start plus RK4 shooting for the
  inverse-square problem.
* :func:`radial_coulomb_annulus_ground`: weighted finite differences for a
  2D radial Coulomb problem on an annulus.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid
from scipy.optimize import brentq

from . import _kernels
from .errors import ConvergenceError, DomainError
from .exclusion import DEFAULT_REGISTRY, xi_H

RESIDUAL_TOL = 1e-8
MIN_GRID = 64

# Smallest inner radius for which the annulus bound has been checked by the
# test suite at the documented grid sizes.
ANNULUS_DELTA_CERTIFIED = 1e-6


@dataclass(frozen=True)
class EigenResult:
    """Lowest eigenvalue of a discretized problem.

    Attributes
    ----------
    lambda_min : float
        Eigenvalue in units of 1/length^2.
    grid_size : int
        Number of grid cells or integration steps.
    residual : float
        Relative backward error of the returned eigenpair, or the relative
        width of the final bracket for shooting.
    """

    lambda_min: float
    grid_size: int
    residual: float


def _lowest_generalized(k_diag, k_off, mass):
    """Lowest eigenpair of ``K v = lam M v`` with tridiagonal K and diagonal M."""
    s = 1.0 / np.sqrt(mass)
    d = k_diag * s * s
    e = k_off * s[:-1] * s[1:]
    lam, y = _kernels.tridiag_lowest(d, e)
    y = np.asarray(y, dtype=float)
    ay = d * y
    ay[:-1] += e * y[1:]
    ay[1:] += e * y[:-1]
    norm_a = float(np.max(np.abs(d) + np.r_[np.abs(e), 0.0] + np.r_[0.0, np.abs(e)]))
    residual = float(np.linalg.norm(ay - lam * y) / (norm_a * np.linalg.norm(y)))
    return lam, y * s, residual


def ll_neumann_ground_energy(eta, l, n=100_000):
    """Lowest even-sector eigenvalue of ``-d^2/dr^2 + 2 eta delta_0`` on ``[-l, l]``.

    Solves ``-u'' = lam u`` on ``(0, l)`` with ``u'(0) = eta u(0)`` and
    ``u'(l) = 0``. The Robin end uses a ghost point (second order); the
    resulting matrix is symmetrized with half-weight end masses. The eigenvalue
    is refined by a Rayleigh quotient in difference form, which is free of the
    ``eps * ||A||`` rounding floor of the raw tridiagonal solve.

    Parameters
    ----------
    eta : float
        Coupling, ``>= 0``.
    l : float
        Half-length, ``> 0``.
    n : int
        Number of cells, ``>= 64``.
    """
    eta = float(eta)
    l = float(l)
    if not (eta >= 0.0 and math.isfinite(eta)):
        raise DomainError("eta must be finite and >= 0")
    if not (l > 0.0 and math.isfinite(l)):
        raise DomainError("l must be positive")
    if int(n) != n or n < MIN_GRID:
        raise DomainError(f"grid size must be an integer >= {MIN_GRID}")
    n = int(n)
    h = l / n
    kd = np.full(n + 1, 2.0 / h)
    kd[0] = 1.0 / h + eta
    kd[-1] = 1.0 / h
    ko = np.full(n, -1.0 / h)
    mass = np.full(n + 1, h)
    mass[0] = mass[-1] = 0.5 * h
    _, v, residual = _lowest_generalized(kd, ko, mass)
    dv = np.diff(v)
    energy = float(np.sum(dv * dv) / h + eta * v[0] * v[0])
    lam = energy / float(np.sum(mass * v * v))
    return EigenResult(lam, n, residual)


def _shoot(alpha, lams, n_steps, t0):
    return _kernels.shoot_neumann(float(alpha), np.ascontiguousarray(lams, dtype=float),
                                  int(n_steps), float(t0))


def cs_neumann_ground_energy(alpha, l=1.0, n_steps=4000, t0=1e-3, rtol=1e-13):
    """Lowest Neumann eigenvalue of ``-u'' + alpha(alpha-1)/r^2 u`` on ``(0, l)``.

    With ``u = r^alpha w`` the regular solution satisfies
    ``w'' + (2 alpha / r) w' + lam w = 0``, ``w(0) = 1``. The problem is solved
    on the unit interval: a power series supplies ``w`` at ``t0``, RK4 in the
    variable ``ln t`` carries it to ``t = 1``, and the Neumann condition
    ``alpha w(1) + w'(1) = 0`` is located in ``lam`` by a scan followed by
    repeated 32-point sectioning. The eigenvalue is then ``Lam / l^2``.

    Parameters
    ----------
    alpha : float
        In ``(1/2, 100]``.
    l : float
        Interval length.
    n_steps : int
        RK4 steps on ``[ln t0, 0]``.
    """
    alpha = float(alpha)
    l = float(l)
    if not (0.5 < alpha <= 100.0):
        raise DomainError("alpha must lie in (1/2, 100]")
    if not (l > 0.0 and math.isfinite(l)):
        raise DomainError("l must be positive")
    if int(n_steps) != n_steps or n_steps < MIN_GRID:
        raise DomainError(f"n_steps must be an integer >= {MIN_GRID}")
    if not (0.0 < t0 < 0.1):
        raise DomainError("t0 must lie in (0, 0.1)")

    # G(0) = alpha > 0; scan xi = sqrt(Lam) upward for the first sign change
    xi_max = 3.0 * (alpha + 10.0)
    xis = np.arange(0.05, xi_max + 0.25, 0.25)
    g = _shoot(alpha, xis * xis, n_steps, t0)
    flips = np.nonzero(g <= 0.0)[0]
    if flips.size == 0:
        raise ConvergenceError(f"no Neumann eigenvalue found below xi = {xi_max}")
    i = int(flips[0])
    lo = 0.0 if i == 0 else xis[i - 1] ** 2
    hi = xis[i] ** 2
    if g[i] == 0.0:
        lo = hi
    k = 32
    for _ in range(200):
        if hi - lo <= rtol * hi:
            break
        grid = np.linspace(lo, hi, k + 1)[1:-1]
        vals = _shoot(alpha, grid, n_steps, t0)
        j = np.nonzero(vals <= 0.0)[0]
        if j.size == 0:
            lo = grid[-1]
        else:
            jj = int(j[0])
            hi = grid[jj]
            if vals[jj] == 0.0:
                lo = hi
                break
            if jj > 0:
                lo = grid[jj - 1]
    else:
        raise ConvergenceError("shooting bisection did not converge")
    lam = 0.5 * (lo + hi)
    return EigenResult(lam / (l * l), int(n_steps), (hi - lo) / max(hi, 1e-300))


def radial_coulomb_annulus_ground(mu, eps, delta, n=4096):
    """Lowest Neumann eigenvalue of ``-mu (v'' + v'/r) - v/r`` on ``[delta, eps]``.

    The quadratic form ``int mu |v'|^2 r dr - int |v|^2 dr`` over
    ``int |v|^2 r dr`` is discretized with midpoint radii in the stiffness and
    trapezoid weights elsewhere, which yields a symmetric tridiagonal pencil.
    Bounded below by ``-(1/mu + 2/eps)`` uniformly in ``delta``; the test suite
    certifies this for ``delta`` down to ``ANNULUS_DELTA_CERTIFIED``.
    """
    mu = float(mu)
    eps = float(eps)
    delta = float(delta)
    if not (mu > 0.0 and math.isfinite(mu)):
        raise DomainError("mu must be positive")
    if not (0.0 < delta < eps and math.isfinite(eps)):
        raise DomainError("need 0 < delta < eps")
    if int(n) != n or n < 256:
        raise DomainError("grid size must be an integer >= 256")
    n = int(n)
    h = (eps - delta) / n
    r = delta + h * np.arange(n + 1)
    rmid = 0.5 * (r[:-1] + r[1:])
    c = np.ones(n + 1)
    c[0] = c[-1] = 0.5
    stiff = mu * rmid / h
    kd = np.zeros(n + 1)
    kd[:-1] += stiff
    kd[1:] += stiff
    kd -= c * h
    ko = -stiff
    mass = c * h * r
    _, v, residual = _lowest_generalized(kd, ko, mass)
    dv = np.diff(v)
    energy = float(np.sum(stiff * dv * dv) - np.sum(c * h * v * v))
    lam = energy / float(np.sum(mass * v * v))
    return EigenResult(lam, n, residual)


def annulus_lemma_bound(mu, eps):
    """Lower bound ``-(1/mu + 2/eps)`` for :func:`radial_coulomb_annulus_ground`."""
    return -(1.0 / mu + 2.0 / eps)


# --------------------------------------------------------------------------
# Counterexample showing that rho-tilde cannot be replaced by rho
# --------------------------------------------------------------------------

def default_bump(n=20001):
    """Smooth bump ``c exp(-1/(1-x^2))`` on ``[-1, 1]`` with ``int phi^2 = 1``.

    Returns
    -------
    x, phi : ndarray
        Sample points and values (trapezoid-normalized).
    """
    x = np.linspace(-1.0, 1.0, n)
    phi = np.zeros_like(x)
    inner = np.abs(x) < 1.0
    phi[inner] = np.exp(-1.0 / (1.0 - x[inner] ** 2))
    phi /= math.sqrt(trapezoid(phi * phi, x))
    return x, phi


@dataclass(frozen=True)
class BumpIntegrals:
    grad_sq: float
    sixth: float


def bump_integrals(x, phi):
    """Trapezoid integrals of ``phi'^2`` and ``phi^6`` after validating ``phi``."""
    x = np.asarray(x, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if x.ndim != 1 or x.shape != phi.shape or x.size < 3:
        raise DomainError("bump must be sampled on a 1D grid with matching values")
    if np.any(np.diff(x) <= 0):
        raise DomainError("bump grid must be strictly increasing")
    if x[0] < -1.0 - 1e-12 or x[-1] > 1.0 + 1e-12:
        raise DomainError("bump must be supported in [-1, 1]")
    if np.any(phi < 0):
        raise DomainError("bump must be nonnegative")
    norm = float(trapezoid(phi * phi, x))
    if abs(norm - 1.0) > 1e-8:
        raise DomainError(f"bump must satisfy int phi^2 = 1 (got {norm!r})")
    dphi = np.gradient(phi, x)
    return BumpIntegrals(float(trapezoid(dphi * dphi, x)), float(trapezoid(phi ** 6, x)))


def default_epsilon(N, integrals: BumpIntegrals, C_H=DEFAULT_REGISTRY.C_H, margin=4.0):
    """Width with ``eps^-2 N C_H int phi^6 = margin * 9 N (N-1)``, capped below 1/3."""
    eps = math.sqrt(N * C_H * integrals.sixth / (margin * 9.0 * N * (N - 1)))
    return min(eps, 0.3)


def _gap_terms(N, alpha, epsilon, ints, C_H, xi=None):
    xi = xi_H(alpha) if xi is None else xi
    lhs = N * ints.grad_sq / epsilon ** 2 + 4.5 * alpha * (alpha - 1.0) * N * (N - 1)
    rhs = N * C_H * xi * xi * ints.sixth / epsilon ** 2
    return lhs, rhs


def counterexample_gap(N, alpha, epsilon, bump=None, C_H=DEFAULT_REGISTRY.C_H):
    """Kinetic upper bound and candidate right side for the trial state.

    The trial state places ``N`` particles in a product of narrow bumps
    ``eps^-1/2 phi(x/eps)`` at mutual distance of order one. Its kinetic energy
    is at most ``eps^-2 N int phi'^2 + (9/2) alpha(alpha-1) N(N-1)``, while a
    bound with ``rho`` in place of ``rho-tilde`` would demand at least
    ``eps^-2 N C_H xi_H(alpha)^2 int phi^6``.

    Parameters
    ----------
    N : int
        Particle number, ``>= 2``.
    alpha : float
        Statistics parameter, ``>= 1``.
    epsilon : float
        Bump width in ``(0, 1/3)``.
    bump : tuple of ndarray, optional
        ``(x, phi)`` samples; defaults to :func:`default_bump`.

    Returns
    -------
    (float, float)
        ``(lhs_upper, rhs)``.
    """
    if int(N) != N or N < 2:
        raise DomainError("N must be an integer >= 2")
    if alpha < 1.0:
        raise DomainError("alpha must be >= 1")
    if not (0.0 < epsilon < 1.0 / 3.0):
        raise DomainError("epsilon must lie in (0, 1/3)")
    x, phi = default_bump() if bump is None else bump
    ints = bump_integrals(x, phi)
    return _gap_terms(int(N), float(alpha), float(epsilon), ints, C_H)


@dataclass(frozen=True)
class CrossingResult:
    alpha_star: float
    lhs_upper: float
    rhs: float
    epsilon: float
    grad_sq: float
    sixth: float
    scan_points: int


def counterexample_crossing(N, alpha_max, epsilon=None, bump=None,
                            C_H=DEFAULT_REGISTRY.C_H, n_scan=40, tol=1e-10):
    """First ``alpha`` in ``[1, alpha_max]`` where the candidate right side wins.

    Scans ``rhs - lhs`` on ``n_scan`` points and refines the first sign
    change with Brent's method. ``alpha_star`` is ``nan`` when no crossing
    is found.
    """
    if not (1.0 < alpha_max <= 100.0):
        raise DomainError("alpha_max must lie in (1, 100]")
    x, phi = default_bump() if bump is None else bump
    ints = bump_integrals(x, phi)
    if epsilon is None:
        epsilon = default_epsilon(N, ints, C_H)
    if not (0.0 < epsilon < 1.0 / 3.0):
        raise DomainError("epsilon must lie in (0, 1/3)")

    def gap(a):
        lhs, rhs = _gap_terms(int(N), a, epsilon, ints, C_H)
        return rhs - lhs

    alphas = np.linspace(1.0, float(alpha_max), n_scan)
    vals = np.array([gap(a) for a in alphas])
    pos = np.nonzero(vals > 0.0)[0]
    if pos.size == 0:
        a_star = math.nan
        lhs, rhs = _gap_terms(int(N), float(alpha_max), epsilon, ints, C_H)
    else:
        i = int(pos[0])
        if i == 0:
            a_star = 1.0
        else:
            a_star = float(brentq(gap, alphas[i - 1], alphas[i], xtol=tol, rtol=1e-15))
        lhs, rhs = _gap_terms(int(N), a_star, epsilon, ints, C_H)
    return CrossingResult(a_star, lhs, rhs, float(epsilon), ints.grad_sq, ints.sixth, n_scan)
