"""Applications: harmonic trap, Coulomb stability and confined Calogero-Sutherland.

The confined problem reduces, for a fixed partition of the line into
intervals ``I_j`` and an exterior, to the separable convex program

    minimize  sum_j k_j E(rho_j) + V_j rho_j + V_ext rho_ext
    s.t.      sum_j rho_j + rho_ext = N,  rho >= 0,

with ``k_j = xi_H(alpha)^2 / |I_j|^2``, ``V_j = inf_{I_j} V`` and
``E(r) = max(0, r - 1, [r >= 2] r^3 / 32)``. It is solved exactly through
its single Lagrange multiplier.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq, minimize_scalar

from .errors import ConvergenceError, DomainError, InapplicableBoundError
from .exclusion import (
    C_A_LOWER,
    C_A_UPPER,
    DEFAULT_REGISTRY,
    ConstantsRegistry,
    StatisticsKind,
    StatisticsParams,
    c_alpha_N,
    xi_H,
)
from .report import BoundReport
from .special import gamma_fn

# root of r^3 - 32 r + 32 above 2, where r - 1 = r^3 / 32
RHO_C = float(brentq(lambda r: r ** 3 - 32.0 * r + 32.0, 2.0, 6.0, xtol=1e-15))


# --------------------------------------------------------------------------
# Harmonic trap
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TrapSpec:
    """``N`` anyons in the trap ``V(x) = omega^2 |x|^2 / 2``."""

    alpha: float
    N: int
    omega: float
    C_A: float = C_A_LOWER
    L_angular: int | None = None

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise DomainError("N must be a positive integer")
        if not (self.omega > 0 and math.isfinite(self.omega)):
            raise DomainError("omega must be positive")
        if not (C_A_LOWER <= self.C_A <= C_A_UPPER):
            raise DomainError(f"C_A must lie in [{C_A_LOWER:g}, pi]")


def harmonic_trap_bound(spec: TrapSpec):
    """Thomas-Fermi lower bound ``(1/3) sqrt(8 kappa / pi) omega N^{3/2}``.

    ``kappa = C_A C_{alpha,N}^2`` when that is positive. Otherwise (bosonic
    type statistics, or a single particle) the weaker kinetic inequality with
    ``kappa = C_A / N`` is used, which yields ``(1/3) sqrt(8 C_A / pi) omega N``.
    The report carries the multiplier ``lambda``, the profile radius and a
    quadrature check that the profile integrates to ``N``.
    """
    N, omega = int(spec.N), float(spec.omega)
    C = float(c_alpha_N(spec.alpha, N)) if N >= 2 else 0.0
    if C > 0.0:
        kappa, branch = spec.C_A * C * C, "exclusion"
    else:
        kappa, branch = spec.C_A / N, "bosonic"
    lam = omega * math.sqrt(2.0 * kappa * N / math.pi)
    radius = math.sqrt(2.0 * lam) / omega
    value = math.sqrt(8.0 * kappa / math.pi) * omega * N ** 1.5 / 3.0
    mass, _ = quad(lambda r: 2.0 * math.pi * r * (lam - 0.5 * omega ** 2 * r * r) / (2.0 * kappa),
                   0.0, radius, epsabs=0.0, epsrel=1e-13)
    stats = StatisticsParams(StatisticsKind.ANYON, alpha=float(spec.alpha))
    return BoundReport(
        value, stats, {"C_A": spec.C_A},
        {"C_alpha_N": C, "kappa": kappa, "lambda": lam, "radius": radius,
         "branch": branch, "profile_mass": mass, "profile_mass_error": abs(mass - N)},
    )


def angular_momentum_bound(spec: TrapSpec):
    """Angular-momentum bound ``omega (N + |L + alpha N (N-1) / 2|)``."""
    if spec.L_angular is None:
        raise DomainError("L_angular is required")
    N = spec.N
    return spec.omega * (N + abs(spec.L_angular + spec.alpha * N * (N - 1) / 2.0))


# --------------------------------------------------------------------------
# Stability with Coulomb interactions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class StabilitySpec:
    """``N`` anyons of mass ``m`` and statistics denominator ``nu`` with ``K`` nuclei of charge ``Z``."""

    m: float
    Z: float
    nu: int
    K: int
    N: int
    b: float | None = None

    def __post_init__(self):
        if not (self.m > 0 and math.isfinite(self.m)):
            raise DomainError("m must be positive")
        if not (self.Z >= 1 and math.isfinite(self.Z)):
            raise DomainError("Z must be >= 1")
        if int(self.nu) != self.nu or self.nu < 1:
            raise DomainError("nu must be a positive integer")
        if int(self.K) != self.K or self.K < 0:
            raise DomainError("K must be a nonnegative integer")
        if int(self.N) != self.N or self.N < 1:
            raise DomainError("N must be a positive integer")
        if self.b is not None and not (self.b > 0 and math.isfinite(self.b)):
            raise DomainError("b must be positive")

    @property
    def default_b(self):
        return self.nu ** 2 * self.m * (2.0 * self.Z + 1.0)


def stability_value(spec: StabilitySpec, b, C_A_prime):
    """The explicit lower bound at a given ``b > 0``."""
    if not b > 0:
        raise DomainError("b must be positive")
    m, nu, z2 = spec.m, spec.nu, 2.0 * spec.Z + 1.0
    log_term = max(0.0, math.log(288.0 * math.pi * m * C_A_prime * nu ** 2 / b))
    bracket = 5.0 + 16.0 * m * m * z2 * z2 / (b * b) + log_term
    return -4.0 * math.pi * m * C_A_prime * nu ** 2 * z2 ** 2 * spec.K * bracket - z2 * b * spec.N


def stability_bound(spec: StabilitySpec, registry: ConstantsRegistry = DEFAULT_REGISTRY):
    """Ground-state lower bound for anyonic matter with Coulomb interactions.

    Evaluated at ``spec.b`` or, when absent, at ``b = nu^2 m (2Z+1)``. The
    diagnostics add the bound at a numerically optimized ``b`` (never below the
    default), the value per anyon and the implied constant ``C`` in
    ``-C nu^2 m (2Z+1)^2 (K + N)``.
    """
    Cp = registry.C_A_prime
    b0 = spec.b if spec.b is not None else spec.default_b
    value = stability_value(spec, b0, Cp)

    ref = spec.default_b
    res = minimize_scalar(lambda t: -stability_value(spec, ref * math.exp(t), Cp),
                          bounds=(-30.0, 30.0), method="bounded", options={"xatol": 1e-10})
    b_opt = ref * math.exp(res.x)
    v_opt = stability_value(spec, b_opt, Cp)
    if v_opt < value:
        b_opt, v_opt = b0, value
    scale = spec.nu ** 2 * spec.m * (2.0 * spec.Z + 1.0) ** 2 * (spec.K + spec.N)
    return BoundReport(
        value, None, {"C_A": registry.C_A, "C_A_prime": Cp},
        {"b": b0, "b_default": spec.default_b, "b_optimized": b_opt,
         "value_optimized_b": v_opt, "per_particle": value / spec.N,
         "implied_constant": -value / scale},
    )


# --------------------------------------------------------------------------
# Confined Calogero-Sutherland particles
# --------------------------------------------------------------------------

def script_E(rho):
    """``E(r) = max(0, r - 1, [r >= 2] r^3 / 32)``, elementwise."""
    r = np.asarray(rho, dtype=float)
    cube = np.where(r >= 2.0, r ** 3 / 32.0, 0.0)
    out = np.maximum(np.maximum(0.0, r - 1.0), cube)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class PartitionSpec:
    """Finite intervals with potential infima plus an exterior region.

    Parameters
    ----------
    intervals : sequence of (lo, hi)
        Disjoint finite intervals.
    V : sequence of float
        ``inf`` of the potential on each interval; ``+inf`` removes the interval.
    V_ext : float
        ``inf`` of the potential on the exterior, possibly ``+inf``.
    alpha : float
        At least 1.
    N : int
        At least 2.
    """

    intervals: tuple
    V: tuple
    V_ext: float
    alpha: float
    N: int
    xi: float | None = None

    def __post_init__(self):
        iv = np.asarray(self.intervals, dtype=float).reshape(-1, 2)
        V = np.asarray(self.V, dtype=float).ravel()
        if iv.shape[0] != V.size or V.size == 0:
            raise DomainError("need one potential value per interval")
        if np.any(~np.isfinite(iv)) or np.any(iv[:, 1] <= iv[:, 0]):
            raise DomainError("intervals must be finite with lo < hi")
        order = np.argsort(iv[:, 0])
        if np.any(iv[order][1:, 0] < iv[order][:-1, 1]):
            raise DomainError("intervals must be disjoint")
        if np.any(np.isnan(V)) or np.any(V == -np.inf) or math.isnan(self.V_ext) \
                or self.V_ext == -math.inf:
            raise DomainError("potential infima must be > -inf")
        if not self.alpha >= 1.0:
            raise InapplicableBoundError("the bound requires alpha >= 1")
        if int(self.N) != self.N or self.N < 2:
            raise DomainError("N must be an integer >= 2")
        object.__setattr__(self, "intervals", iv)
        object.__setattr__(self, "V", V)
        object.__setattr__(self, "V_ext", float(self.V_ext))


def _masses(lam, V, k, sc):
    """Lower and upper ends of the per-interval argmin sets at multiplier ``lam``."""
    s = lam - V
    # lam is often a breakpoint V_j or V_j + k_j; absorb the rounding of lam - V
    tol = 8.0 * np.finfo(float).eps * (abs(lam) + np.abs(V) + k)
    s = np.where(np.abs(s) <= tol, 0.0, s)
    s = np.where(np.abs(s - k) <= tol, k, s)
    lo = np.zeros_like(V)
    hi = np.zeros_like(V)
    # s == 0: [0, 1]
    hi = np.where(s == 0.0, 1.0, hi)
    one = (s > 0.0) & (s < k)
    lo = np.where(one, 1.0, lo)
    hi = np.where(one, 1.0, hi)
    kink = s == k
    lo = np.where(kink, 1.0, lo)
    hi = np.where(kink, RHO_C, hi)
    flat = (s > k) & (s < sc)
    lo = np.where(flat, RHO_C, lo)
    hi = np.where(flat, RHO_C, hi)
    cubic = s >= sc
    with np.errstate(invalid="ignore", divide="ignore"):
        r = np.sqrt(np.where(cubic, 32.0 * s / (3.0 * k), 0.0))
    lo = np.where(cubic, r, lo)
    hi = np.where(cubic, r, hi)
    return lo, hi


def _total(lam, V, k, sc, V_ext):
    lo, hi = _masses(lam, V, k, sc)
    tlo, thi = float(lo.sum()), float(hi.sum())
    if lam > V_ext:
        return math.inf, math.inf
    if lam == V_ext:
        thi = math.inf
    return tlo, thi


def cs_confined_energy(partition: PartitionSpec):
    """Exact minimum of the partition functional.

    The multiplier ``lambda`` is located among the breakpoints ``V_j``,
    ``V_j + k_j`` and ``V_ext`` by binary search on the monotone total mass,
    and by root finding between breakpoints where the mass is continuous.
    When ``N`` is reached on a flat piece the minimal masses are assigned
    first and the remainder is distributed in increasing order of ``V``.
    """
    p = partition
    xi = xi_H(p.alpha) if p.xi is None else float(p.xi)
    N = float(p.N)
    lengths = p.intervals[:, 1] - p.intervals[:, 0]
    active = np.isfinite(p.V)
    V = p.V[active]
    k = xi * xi / lengths[active] ** 2
    sc = 3.0 * k * RHO_C ** 2 / 32.0
    V_ext = p.V_ext

    bps = np.concatenate([V, V + k] + ([[V_ext]] if math.isfinite(V_ext) else []))
    bps = np.unique(bps)
    if bps.size == 0:
        raise DomainError("no interval or exterior can hold mass")

    # first breakpoint whose upper total reaches N
    lo_i, hi_i = 0, bps.size
    while lo_i < hi_i:
        mid = (lo_i + hi_i) // 2
        if _total(bps[mid], V, k, sc, V_ext)[1] >= N:
            hi_i = mid
        else:
            lo_i = mid + 1
    idx = lo_i
    lam = None
    if idx < bps.size:
        tlo, _ = _total(bps[idx], V, k, sc, V_ext)
        if tlo <= N:
            lam = float(bps[idx])
    if lam is None:
        # N lies strictly inside an open piece where the total is continuous
        left = bps[idx - 1] if idx > 0 else None
        right = bps[idx] if idx < bps.size else None
        if left is None:
            raise ConvergenceError("total mass cannot reach N")
        if right is None:
            right = left + 1.0
            while _total(right, V, k, sc, V_ext)[0] < N:
                right = left + 2.0 * (right - left)
                if not math.isfinite(right):
                    raise ConvergenceError("multiplier search diverged")

        def g(t):
            return _total(t, V, k, sc, V_ext)[0] - N

        lam = brentq(g, float(left), float(right), xtol=1e-15 * max(1.0, abs(right)),
                     rtol=4.0 * np.finfo(float).eps, maxiter=500)

    lo, hi = _masses(lam, V, k, sc)
    rho = lo.copy()
    rho_ext = 0.0
    residual = N - float(rho.sum())
    if residual > 0:
        slack = hi - lo
        keys = [(V[j], 0, j) for j in range(V.size) if slack[j] > 0]
        if math.isfinite(V_ext) and lam == V_ext:
            keys.append((V_ext, 1, -1))
        for _, _, j in sorted(keys):
            if residual <= 0:
                break
            if j < 0:
                rho_ext += residual
                residual = 0.0
            else:
                add = min(slack[j], residual)
                rho[j] += add
                residual -= add
    else:
        # continuous solve: absorb rounding into the largest occupation
        if rho.size:
            rho[int(np.argmax(rho))] += residual

    value = float(np.sum(k * script_E(rho) + V * rho))
    if rho_ext > 0:
        value += V_ext * rho_ext
    full = np.zeros(p.V.size)
    full[active] = rho
    stats = StatisticsParams(StatisticsKind.CALOGERO_SUTHERLAND, alpha=float(p.alpha))
    return BoundReport(
        value, stats, {"C_H": DEFAULT_REGISTRY.C_H},
        {"xi_H": xi, "lambda": lam, "occupations": full.tolist(), "rho_ext": rho_ext,
         "rho_c": RHO_C},
    )


# -- potentials ------------------------------------------------------------

class Potential:
    """A one-dimensional external potential with interval infima."""

    rigorous = True
    name = "potential"

    def inf_on(self, lo, hi):  # pragma: no cover - interface
        raise NotImplementedError

    def inf_outside(self, r):
        """``inf`` of V over ``|x| >= r``."""
        raise NotImplementedError  # pragma: no cover

    @property
    def length_scale(self):
        return 1.0

    def describe(self):
        return {"name": self.name, "rigorous": self.rigorous}


@dataclass(frozen=True)
class PowerLawPotential(Potential):
    """``V(x) = (c |x|)^mu``."""

    c: float
    mu: float
    name = "powerlaw"

    def __post_init__(self):
        if not (self.c > 0 and self.mu > 0):
            raise DomainError("power-law potential needs c > 0 and mu > 0")

    def __call__(self, x):
        return (self.c * np.abs(np.asarray(x, dtype=float))) ** self.mu

    def inf_on(self, lo, hi):
        if lo <= 0.0 <= hi:
            return 0.0
        return float((self.c * min(abs(lo), abs(hi))) ** self.mu)

    def inf_outside(self, r):
        return float((self.c * abs(r)) ** self.mu)

    @property
    def length_scale(self):
        return 1.0 / self.c

    def describe(self):
        return {"name": self.name, "rigorous": True, "c": self.c, "mu": self.mu}


class HarmonicPotential(PowerLawPotential):
    """``V(x) = omega^2 x^2 / 2``, the power law with ``c = omega / sqrt 2``, ``mu = 2``."""

    name = "harmonic"

    def __init__(self, omega):
        if not omega > 0:
            raise DomainError("omega must be positive")
        super().__init__(omega / math.sqrt(2.0), 2.0)
        object.__setattr__(self, "omega", float(omega))

    def describe(self):
        return {"name": self.name, "rigorous": True, "omega": self.omega}


class SampledPotential(Potential):
    """Step potential: each sample holds on the cell around it.

    Outside the sampled range the potential is taken to be ``+inf``, i.e. the
    samples describe a potential with hard walls at the ends of the data.
    """

    name = "sampled"

    def __init__(self, x, V):
        x = np.asarray(x, dtype=float)
        V = np.asarray(V, dtype=float)
        if x.ndim != 1 or x.shape != V.shape or x.size < 2:
            raise DomainError("need at least two samples")
        if np.any(np.diff(x) <= 0):
            raise DomainError("sample positions must be strictly increasing")
        if not np.all(np.isfinite(V)):
            raise DomainError("potential samples must be finite")
        self.x = x
        self.V = V
        mid = 0.5 * (x[1:] + x[:-1])
        self.edges = np.concatenate(([x[0] - 0.5 * (x[1] - x[0])], mid,
                                     [x[-1] + 0.5 * (x[-1] - x[-2])]))

    def inf_on(self, lo, hi):
        # cells overlapping [lo, hi] in more than a point
        i0 = np.searchsorted(self.edges, lo, side="right") - 1
        i1 = np.searchsorted(self.edges, hi, side="left")
        i0 = max(i0, 0)
        i1 = min(i1, self.V.size)
        if i1 <= i0:
            return math.inf
        return float(self.V[i0:i1].min())

    def inf_outside(self, r):
        mask = (self.edges[1:] > r) | (self.edges[:-1] < -r)
        return float(self.V[mask].min()) if np.any(mask) else math.inf

    @property
    def length_scale(self):
        return float(self.edges[-1] - self.edges[0]) / 20.0

    def describe(self):
        return {"name": self.name, "rigorous": True, "samples": int(self.x.size)}


class CallablePotential(Potential):
    """Arbitrary callable; infima are estimated from samples and not rigorous."""

    name = "callable"
    rigorous = False

    def __init__(self, f: Callable, length_scale=1.0, samples=1024):
        self.f = f
        self._scale = float(length_scale)
        self.samples = int(samples)

    def inf_on(self, lo, hi):
        x = np.linspace(lo, hi, self.samples)
        return float(np.min(self.f(x)))

    def inf_outside(self, r):
        t = r * np.geomspace(1.0, 1e3, self.samples)
        return float(min(np.min(self.f(t)), np.min(self.f(-t))))

    @property
    def length_scale(self):
        return self._scale

    def describe(self):
        return {"name": self.name, "rigorous": False, "samples": self.samples}


def symmetric_partition(potential: Potential, a, M, alpha, N, xi=None):
    """The uniform family ``[-(k+1)a, -ka], [ka, (k+1)a]``, ``k < M``, plus ``|x| >= M a``."""
    ks = np.arange(M)
    left = np.stack([-(ks + 1) * a, -ks * a], axis=1)[::-1]
    right = np.stack([ks * a, (ks + 1) * a], axis=1)
    iv = np.concatenate([left, right])
    V = [potential.inf_on(lo, hi) for lo, hi in iv]
    return PartitionSpec(iv, V, potential.inf_outside(M * a), alpha, N, xi)


MAX_M = 4096


def _solve_auto_M(potential, a, alpha, N, xi, M0=8):
    M = M0
    while True:
        rep = cs_confined_energy(symmetric_partition(potential, a, M, alpha, N, xi))
        occ = rep.diagnostics["occupations"]
        edge = occ[0] + occ[-1]
        if (rep.diagnostics["rho_ext"] == 0 and edge == 0) or M >= MAX_M:
            return M, rep
        M = min(2 * M, MAX_M)


def optimize_partition(potential: Potential, alpha, N, a_grid: Sequence[float] | None = None,
                       M_grid: Sequence[int] | None = None):
    """Best partition lower bound over a grid of uniform symmetric partitions.

    Parameters
    ----------
    potential : Potential
    alpha : float
        At least 1.
    N : int
    a_grid : sequence of float, optional
        Interval widths. Default ``logspace(-2, 1, 40)`` times the
        potential's length scale.
    M_grid : sequence of int, optional
        Numbers of intervals per side. By default ``M`` is doubled from 8
        until the outermost intervals and the exterior are empty (at most
        4096).

    Returns
    -------
    BoundReport
        Ties are broken by the smallest ``a`` and then the smallest ``M``.
    """
    if a_grid is None:
        a_grid = np.logspace(-2, 1, 40) * potential.length_scale
    a_grid = [float(a) for a in a_grid]
    if len(a_grid) == 0 or (M_grid is not None and len(M_grid) == 0):
        raise DomainError("empty search grid")
    if any(not a > 0 for a in a_grid):
        raise DomainError("interval widths must be positive")
    if not alpha >= 1.0:
        raise InapplicableBoundError("the bound requires alpha >= 1")
    xi = xi_H(alpha)
    best = None
    for a in sorted(a_grid):
        if M_grid is None:
            cands = [_solve_auto_M(potential, a, alpha, N, xi)]
        else:
            cands = [(int(M), cs_confined_energy(symmetric_partition(potential, a, int(M),
                                                                     alpha, N, xi)))
                     for M in sorted(M_grid)]
        for M, rep in cands:
            if best is None or rep.value > best[2].value:
                best = (a, M, rep)
    a, M, rep = best
    diag = dict(rep.diagnostics)
    diag.update({"a": a, "M": M, "grid_a": len(a_grid),
                 "grid_M": "auto" if M_grid is None else len(M_grid),
                 "potential": potential.describe(),
                 "rigorous": potential.rigorous})
    return BoundReport(rep.value, rep.statistics, rep.constants_used, diag)


def cs_oscillator_energy(alpha, N, omega):
    """Exact ground-state energy ``omega N (1 + alpha (N-1)) / 2`` in a harmonic trap."""
    return 0.5 * omega * N * (1.0 + alpha * (N - 1))


# -- power-law asymptotics -------------------------------------------------

@dataclass(frozen=True)
class PowerLawConstant:
    value: float
    value_closed_form: float
    I_gamma: float
    I_quad: float
    J_gamma: float
    J_quad: float


def powerlaw_I_J(mu):
    """``I = int_0^1 sqrt(1 - x^mu)`` and ``J = (1/3) int (1-x^mu)^{3/2} + int x^mu sqrt(1-x^mu)``.

    Returns the Gamma-function values followed by adaptive quadrature values.
    """
    mu = float(mu)
    if not mu > 0:
        raise DomainError("mu must be positive")
    sp = math.sqrt(math.pi) / 2.0
    I_g = sp * gamma_fn(1.0 + 1.0 / mu) / gamma_fn(1.5 + 1.0 / mu)
    J_g = sp * (mu + 2.0) / (2.0 * mu * mu) * gamma_fn(1.0 / mu) / gamma_fn(2.5 + 1.0 / mu)
    opts = {"epsabs": 0.0, "epsrel": 1e-13, "limit": 200}
    I_q = quad(lambda x: math.sqrt(1.0 - x ** mu), 0.0, 1.0, **opts)[0]
    J_q = (quad(lambda x: (1.0 - x ** mu) ** 1.5, 0.0, 1.0, **opts)[0] / 3.0
           + quad(lambda x: x ** mu * math.sqrt(1.0 - x ** mu), 0.0, 1.0, **opts)[0])
    return I_g, J_g, I_q, J_q


def powerlaw_asymptotic_constant(mu):
    """Large-``N`` constant of the power-law trap bound.

    ``value = (8 sqrt(2/3))^{-2mu/(mu+2)} J / I^{(3mu+2)/(mu+2)}``;
    ``value_closed_form`` is the same number written entirely in Gamma
    functions and serves as a consistency check.
    """
    mu = float(mu)
    I_g, J_g, I_q, J_q = powerlaw_I_J(mu)
    p = 2.0 * mu / (mu + 2.0)
    q = (3.0 * mu + 2.0) / (mu + 2.0)
    value = (8.0 * math.sqrt(2.0 / 3.0)) ** (-p) * J_g / I_g ** q
    closed = ((math.sqrt(3.0) / (4.0 * math.sqrt(2.0 * math.pi))) ** p
              * (mu + 2.0) / (2.0 * mu * mu)
              * gamma_fn(1.0 / mu) / gamma_fn(2.5 + 1.0 / mu)
              * (gamma_fn(1.5 + 1.0 / mu) / gamma_fn(1.0 + 1.0 / mu)) ** q)
    return PowerLawConstant(value, closed, I_g, I_q, J_g, J_q)


VALIDITY_FACTOR = 100.0


def powerlaw_bound(mu, c, alpha, N):
    """Asymptotic bound ``C(mu) (xi_H c)^{2mu/(mu+2)} N^{(3mu+2)/(mu+2)}`` for ``V = (c|x|)^mu``.

    The report flags whether ``N / (xi c)^{2/mu}`` and ``xi c N`` both exceed
    100, a conventional threshold for the large-``N`` regime.
    """
    mu, c = float(mu), float(c)
    if not (c > 0):
        raise DomainError("c must be positive")
    if not alpha >= 1.0:
        raise InapplicableBoundError("the bound requires alpha >= 1")
    if int(N) != N or N < 2:
        raise DomainError("N must be an integer >= 2")
    const = powerlaw_asymptotic_constant(mu)
    xi = xi_H(alpha)
    xc = xi * c
    p = 2.0 * mu / (mu + 2.0)
    q = (3.0 * mu + 2.0) / (mu + 2.0)
    value = const.value * xc ** p * float(N) ** q
    r1 = N / xc ** (2.0 / mu)
    r2 = xc * N
    valid = r1 > VALIDITY_FACTOR and r2 > VALIDITY_FACTOR
    stats = StatisticsParams(StatisticsKind.CALOGERO_SUTHERLAND, alpha=float(alpha))
    return BoundReport(
        value, stats, {"C_H": DEFAULT_REGISTRY.C_H},
        {"C_mu": const.value, "xi_H": xi, "ratio_N_over_scale": r1, "ratio_xi_c_N": r2,
         "valid": valid,
         "regime": "asymptotic" if valid else "asymptotic regime not reached"},
    )
