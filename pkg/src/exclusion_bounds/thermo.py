"""Gas bounds, potential-form bounds and exactly known reference energies."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError, InapplicableBoundError
from .exclusion import (
    DEFAULT_REGISTRY,
    ConstantsRegistry,
    StatisticsKind,
    StatisticsParams,
    c_alpha_N,
    xi_H,
    xi_S,
)
from .report import BoundReport


@dataclass(frozen=True)
class GasSpec:
    """Homogeneous gas of ``N`` particles in a box.

    Parameters
    ----------
    statistics : StatisticsParams
    rhobar : float
        Mean density (per length in 1D, per area for anyons).
    N : int
    extent : float
        ``L`` in 1D, ``L^2`` for anyons.
    gamma : float
        Homogeneity constant ``rho* <= gamma rhobar`` (Lieb-Liniger only).
    """

    statistics: StatisticsParams
    rhobar: float
    N: int
    extent: float
    gamma: float = 1.0

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise DomainError("N must be a positive integer")
        if not (self.rhobar > 0 and math.isfinite(self.rhobar)):
            raise DomainError("rhobar must be positive")
        if not (self.extent > 0 and math.isfinite(self.extent)):
            raise DomainError("extent must be positive")
        if not self.gamma >= 1.0:
            raise DomainError("gamma must be >= 1")
        if not math.isclose(self.rhobar * self.extent, self.N, rel_tol=1e-9):
            raise DomainError("rhobar * extent must equal N")

    @property
    def dimension(self):
        return 2 if self.statistics.kind is StatisticsKind.ANYON else 1

    @property
    def L(self):
        return math.sqrt(self.extent) if self.dimension == 2 else self.extent

    @classmethod
    def from_box(cls, statistics, N, L, gamma=1.0):
        """Gas of ``N`` particles in an interval (1D) or square (anyons) of side ``L``."""
        dim = 2 if StatisticsKind(statistics.kind) is StatisticsKind.ANYON else 1
        extent = float(L) ** dim
        return cls(statistics, N / extent, int(N), extent, gamma)


# --------------------------------------------------------------------------
# Anyons
# --------------------------------------------------------------------------

def _g(gamma, N):
    return 1.0 / (math.pi * gamma ** 2) - (1.0 + 2.0 * gamma / math.sqrt(N)) ** 2 / (
        math.pi ** 2 * gamma ** 4)


def anyon_cN(N):
    """``c_N = sup_{gamma > 0} g(gamma)`` for the anyon box bound.

    A log-spaced scan over ``gamma in [1e-3, 1e3]`` locates the basin and a
    bounded scalar optimizer polishes the maximum. Tends to 1/4 as ``N`` grows.
    """
    if int(N) != N or N < 2:
        raise DomainError("anyon_cN needs an integer N >= 2")
    N = float(N)
    grid = np.logspace(-3, 3, 601)
    vals = 1.0 / (math.pi * grid ** 2) - (1.0 + 2.0 * grid / math.sqrt(N)) ** 2 / (
        math.pi ** 2 * grid ** 4)
    i = int(np.argmax(vals))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, grid.size - 1)]
    res = minimize_scalar(lambda t: -_g(t, N), bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-14 * hi})
    return float(max(-res.fun, vals[i]))


def anyon_gas_bound(spec: GasSpec, registry: ConstantsRegistry = DEFAULT_REGISTRY):
    """Kinetic energy lower bound for ``N`` anyons in a square of side ``L``.

    The larger of the exclusion bound ``(c_Omega/2) c_N C_{alpha,N}^2 N^2 / L^2``
    (``N >= 2``) and the bosonic Dirichlet bound ``N pi^2 / L^2``. The report's
    ``branch`` diagnostic names the winner.
    """
    if spec.dimension != 2:
        raise DomainError("anyon_gas_bound needs anyon statistics")
    N, L = spec.N, spec.L
    dirichlet = N * math.pi ** 2 / L ** 2
    c_omega = registry.c_Omega_disk
    diag = {"dirichlet_value": dirichlet, "L": L, "N": N}
    if N >= 2:
        cN = anyon_cN(N)
        C = c_alpha_N(spec.statistics.exact_alpha, N)
        exclusion = 0.5 * c_omega * cN * float(C) ** 2 * N ** 2 / L ** 2
        diag.update({"c_N": cN, "C_alpha_N": float(C), "exclusion_value": exclusion})
    else:
        exclusion = -math.inf
        diag["exclusion_value"] = None
    branch = "exclusion" if exclusion > dirichlet else "dirichlet"
    value = max(exclusion, dirichlet)
    diag["branch"] = branch
    diag["per_area"] = value / L ** 2
    return BoundReport(value, spec.statistics, {"c_Omega_disk": c_omega}, diag)


def anyon_potential_bound(V, dA, alpha, N, registry: ConstantsRegistry = DEFAULT_REGISTRY):
    """Potential-form bound ``-(1/(4 C_A)) C_{alpha,N}^-2 sum |V_-|^2 dA``.

    Parameters
    ----------
    V : array_like
        Potential samples on a uniform 2D grid.
    dA : float
        Area per sample.
    alpha : float or Fraction
    N : int

    Raises
    ------
    InapplicableBoundError
        When ``C_{alpha,N} = 0``, where the bound is vacuous.
    """
    V = np.asarray(V, dtype=float)
    if not (dA > 0):
        raise DomainError("dA must be positive")
    C = float(c_alpha_N(alpha, N))
    if C == 0.0:
        raise InapplicableBoundError(
            f"C_(alpha,N) = 0 for alpha={alpha}, N={N}; the potential bound is vacuous")
    neg = np.minimum(V, 0.0)
    integral = float(np.sum(neg * neg) * dA)
    stats = StatisticsParams(StatisticsKind.ANYON, alpha=float(alpha))
    value = -registry.C_A_prime / C ** 2 * integral
    return BoundReport(value, stats, {"C_A": registry.C_A, "C_A_prime": registry.C_A_prime},
                       {"C_alpha_N": C, "integral_V_minus_sq": integral})


# --------------------------------------------------------------------------
# One-dimensional gases
# --------------------------------------------------------------------------

def _ll_xi(eta, gamma, rhobar):
    t = 2.0 * eta / (gamma * rhobar)
    return t, xi_S(t)


def ll_gas_bound(spec: GasSpec, registry: ConstantsRegistry = DEFAULT_REGISTRY):
    """Energy per length ``C_S xi_S(2 eta / (gamma rhobar))^2 rhobar^3``."""
    if spec.statistics.kind is not StatisticsKind.LIEB_LINIGER:
        raise DomainError("ll_gas_bound needs Lieb-Liniger statistics")
    t, xi = _ll_xi(spec.statistics.eta, spec.gamma, spec.rhobar)
    C_S = registry.C_S
    value = C_S * xi * xi * spec.rhobar ** 3
    return BoundReport(value, spec.statistics, {"C_S": C_S},
                       {"xi_S": xi, "xi_S_argument": t, "total": value * spec.extent,
                        "gamma": spec.gamma})


def cs_gas_bound(alpha, rhobar, registry: ConstantsRegistry = DEFAULT_REGISTRY):
    """Energy per length ``C_H xi_H(alpha)^2 rhobar^3`` for ``alpha >= 1``."""
    alpha = float(alpha)
    if not alpha >= 1.0:
        raise InapplicableBoundError(f"the bound requires alpha >= 1, got {alpha}")
    if not rhobar > 0:
        raise DomainError("rhobar must be positive")
    xi = xi_H(alpha)
    C_H = registry.C_H
    stats = StatisticsParams(StatisticsKind.CALOGERO_SUTHERLAND, alpha=alpha)
    return BoundReport(C_H * xi * xi * rhobar ** 3, stats, {"C_H": C_H}, {"xi_H": xi})


def ll_potential_bound(V, dx, eta, gamma, rhobar,
                       registry: ConstantsRegistry = DEFAULT_REGISTRY):
    """Potential-form bound ``-C_S' / xi_S(2 eta/(gamma rhobar)) sum |V_-|^{3/2} dx``.

    Raises
    ------
    InapplicableBoundError
        For ``eta = 0``, where ``xi_S`` vanishes and the bound degenerates.
    """
    V = np.asarray(V, dtype=float)
    if not (dx > 0):
        raise DomainError("dx must be positive")
    if not (rhobar > 0) or not (gamma >= 1.0):
        raise DomainError("need rhobar > 0 and gamma >= 1")
    if eta == 0:
        raise InapplicableBoundError("eta = 0 makes xi_S vanish; the bound degenerates")
    t, xi = _ll_xi(eta, gamma, rhobar)
    integral = float(np.sum(np.abs(np.minimum(V, 0.0)) ** 1.5) * dx)
    Cp = registry.C_S_prime
    stats = StatisticsParams(StatisticsKind.LIEB_LINIGER, eta=float(eta))
    return BoundReport(-Cp / xi * integral, stats, {"C_S": registry.C_S, "C_S_prime": Cp},
                       {"xi_S": xi, "xi_S_argument": t, "integral_V_minus_3_2": integral})


# --------------------------------------------------------------------------
# Reference energies
# --------------------------------------------------------------------------

class ReferenceModel(str, enum.Enum):
    FERMION_2D = "Fermion2D"
    CALOGERO_SUTHERLAND = "CalogeroSutherland"
    LIEB_LINIGER_ASYMPTOTIC = "LiebLinigerAsymptotic"


LL_SMALL_T = 1e-2
LL_LARGE_T = 1e2


@dataclass(frozen=True)
class ReferenceEnergy:
    """Exactly known energy per length (1D) or per area (2D).

    For the Lieb-Liniger model only the asymptotes are known in closed form:
    ``e(t) ~ t`` for small ``t`` and ``e(t) -> pi^2/3`` for large ``t``. In
    between, ``value`` is None and both asymptotes are reported.
    """

    model: ReferenceModel
    value: float | None
    regime: str
    small_t_asymptote: float | None = None
    large_t_asymptote: float | None = None
    asymptotic_only: bool = False

    def __float__(self):
        if self.value is None:
            raise InapplicableBoundError("no closed-form reference value in this regime")
        return float(self.value)


def reference_energy(model, rhobar, alpha=None, eta=None, strict=False):
    """Reference ground-state energy of an exactly solvable homogeneous gas.

    Parameters
    ----------
    model : {"Fermion2D", "CalogeroSutherland", "LiebLinigerAsymptotic"}
    rhobar : float
    alpha : float, optional
        Required for Calogero-Sutherland.
    eta : float, optional
        Required for Lieb-Liniger.
    strict : bool
        Raise instead of returning an envelope when ``t = 2 eta / rhobar``
        is outside the asymptotic regimes.

    Returns
    -------
    ReferenceEnergy
        ``pi rhobar^2``, ``(pi^2/6) alpha^2 rhobar^3`` or
        ``(1/2) e(t) rhobar^3`` respectively.
    """
    model = ReferenceModel(model)
    if not (rhobar > 0 and math.isfinite(rhobar)):
        raise DomainError("rhobar must be positive")
    if model is ReferenceModel.FERMION_2D:
        return ReferenceEnergy(model, math.pi * rhobar ** 2, "exact")
    if model is ReferenceModel.CALOGERO_SUTHERLAND:
        if alpha is None:
            raise DomainError("alpha is required")
        return ReferenceEnergy(model, math.pi ** 2 / 6.0 * alpha ** 2 * rhobar ** 3, "exact")
    if eta is None or eta < 0:
        raise DomainError("eta >= 0 is required")
    t = 2.0 * eta / rhobar
    small = 0.5 * t * rhobar ** 3 if math.isfinite(t) else math.inf
    large = 0.5 * (math.pi ** 2 / 3.0) * rhobar ** 3
    if t <= LL_SMALL_T:
        return ReferenceEnergy(model, small, "small_t", small, large, True)
    if t >= LL_LARGE_T:
        return ReferenceEnergy(model, large, "large_t", small, large, True)
    if strict:
        raise InapplicableBoundError(
            f"t = {t:g} lies between the asymptotic regimes; only asymptotics are available")
    return ReferenceEnergy(model, None, "intermediate", small, large, True)
