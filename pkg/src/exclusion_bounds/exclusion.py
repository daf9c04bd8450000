"""Exclusion strengths, the anyon constant C_{alpha,N} and fixed constants.

``xi_S(y)`` is the smallest nonnegative root of ``xi tan xi = y`` and governs
the Lieb-Liniger (delta interaction) family. ``xi_H(alpha)`` is the smallest
positive root of ``J(xi) + 2 xi J'(xi) = 0`` with ``J = J_{alpha - 1/2}`` and
governs the Calogero-Sutherland (inverse-square) family. Both are square
roots of the lowest Neumann eigenvalue of a two-particle relative problem on
an interval of unit half-length.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Integral, Rational

import numpy as np

from . import _kernels
from .errors import DomainError
from .special import RootBracket, find_root, first_bessel_zero

XI_H_ALPHA_MAX = 100.0
_XI_S_HUGE = 1e12
_HALF_PI = 0.5 * math.pi


# --------------------------------------------------------------------------
# Statistics parameters
# --------------------------------------------------------------------------

class StatisticsKind(str, enum.Enum):
    LIEB_LINIGER = "LiebLiniger"
    CALOGERO_SUTHERLAND = "CalogeroSutherland"
    ANYON = "Anyon"


@dataclass(frozen=True)
class StatisticsParams:
    """Statistics parameters of one particle family.

    Parameters
    ----------
    kind : StatisticsKind
    eta : float, optional
        Delta-interaction strength for Lieb-Liniger (>= 0, may be ``inf``).
    alpha : float, optional
        Statistics parameter for Calogero-Sutherland or anyons.
    fraction : tuple of int, optional
        Reduced ``(mu, nu)`` with ``alpha = mu / nu`` (anyons only).
    """

    kind: StatisticsKind
    eta: float | None = None
    alpha: float | None = None
    fraction: tuple[int, int] | None = None

    def __post_init__(self):
        kind = StatisticsKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is StatisticsKind.LIEB_LINIGER:
            if self.eta is None or math.isnan(self.eta) or self.eta < 0:
                raise DomainError("Lieb-Liniger statistics need eta >= 0")
        else:
            if self.fraction is not None:
                mu, nu = self.fraction
                if kind is not StatisticsKind.ANYON:
                    raise DomainError("a rational fraction is only meaningful for anyons")
                _check_reduced(mu, nu)
                exact = Fraction(mu, nu)
                if self.alpha is None:
                    object.__setattr__(self, "alpha", float(exact))
                elif not math.isclose(self.alpha, float(exact), rel_tol=0, abs_tol=1e-15):
                    raise DomainError(f"alpha={self.alpha} does not equal {mu}/{nu}")
            if self.alpha is None or not math.isfinite(self.alpha):
                raise DomainError(f"{kind.value} statistics need a finite alpha")
            if kind is StatisticsKind.CALOGERO_SUTHERLAND and self.alpha < 0:
                raise DomainError("Calogero-Sutherland statistics need alpha >= 0")

    @property
    def exact_alpha(self):
        """``Fraction(mu, nu)`` when a fraction was given, else the float alpha."""
        if self.fraction is not None:
            return Fraction(*self.fraction)
        return self.alpha

    def to_dict(self):
        out = {"kind": self.kind.value}
        if self.eta is not None:
            out["eta"] = self.eta
        if self.alpha is not None:
            out["alpha"] = self.alpha
        if self.fraction is not None:
            out["fraction"] = list(self.fraction)
        return out


def _check_reduced(mu, nu):
    if not isinstance(mu, Integral) or not isinstance(nu, Integral):
        raise DomainError("fraction entries must be integers")
    if nu <= 0:
        raise DomainError("fraction denominator must be positive")
    if math.gcd(int(mu), int(nu)) != 1:
        raise DomainError(f"fraction {mu}/{nu} is not in lowest terms")


# --------------------------------------------------------------------------
# Constants
# --------------------------------------------------------------------------

C_A_LOWER = 1e-4
C_A_UPPER = math.pi

# local uncertainty constant in one dimension and the proof constants built on it
C_1 = 2.0 / math.pi
C_1_PRIME = math.pi ** 2 / 60.0
C1_EXACT = Fraction(2) * Fraction(1, 60) / 2 ** 10  # 2/pi^2 * C_1' / 2^10, pi^2 cancels
C2_EXACT = Fraction(11, 30)
C2_PRIME_EXACT = C2_EXACT / (16 * 2 ** 7)


def C_d(d):
    """Weyl-type counting constant ``d 2^d / pi^d`` in dimension ``d``."""
    return d * 2.0 ** d / math.pi ** d


def C_d_prime(d):
    """Local uncertainty constant ``(pi^2/4) d^(2-2/d) / ((d+2)(d+4))``."""
    if d < 1:
        raise DomainError("dimension must be >= 1")
    return 0.25 * math.pi ** 2 * d ** (2.0 - 2.0 / d) / ((d + 2.0) * (d + 4.0))


@dataclass(frozen=True)
class ConstantsRegistry:
    """Fixed numerical constants entering the bounds.

    Only ``C_A`` is configurable, within ``[1e-4, pi]``; it defaults to the
    proven lower end. Every report records the registry it used.
    """

    C_A: float = C_A_LOWER
    C_S_lower: float = field(default=float(C1_EXACT), init=False)
    C_S_upper: float = field(default=2.0 / 3.0, init=False)
    C_H: float = field(default=1.0 / 32.0, init=False)
    C_H_upper: float = field(default=2.0 / 3.0, init=False)
    C_A_lower: float = field(default=C_A_LOWER, init=False)
    C_A_upper: float = field(default=C_A_UPPER, init=False)
    C_1: float = field(default=C_1, init=False)
    C_1_prime: float = field(default=C_1_PRIME, init=False)
    c1: float = field(default=float(C1_EXACT), init=False)
    c2: float = field(default=float(C2_EXACT), init=False)
    c2_prime: float = field(default=float(C2_PRIME_EXACT), init=False)
    c3: float = field(default=math.pi ** 2 * float(C1_EXACT), init=False)
    c_Omega_disk: float = field(default=0.169, init=False)
    c_Omega_square: float = field(default=0.112, init=False)

    def __post_init__(self):
        ca = float(self.C_A)
        if not (C_A_LOWER <= ca <= C_A_UPPER):
            raise DomainError(
                f"C_A must lie in [{C_A_LOWER:g}, pi] = [{C_A_LOWER:g}, {C_A_UPPER!r}], got {ca!r}"
            )
        object.__setattr__(self, "C_A", ca)

    @property
    def C_A_prime(self):
        return 1.0 / (4.0 * self.C_A)

    @property
    def C_S(self):
        """The Lieb-Liniger constant actually used: ``min(c1, c2', 4 c3 / pi^2) = c1``."""
        return min(self.c1, self.c2_prime, 4.0 * self.c3 / math.pi ** 2)

    @property
    def C_S_prime(self):
        """Potential-form constant ``(2/3)(3 C_S)^(-1/2)``."""
        return (2.0 / 3.0) / math.sqrt(3.0 * self.C_S)

    def C_d_prime(self, d):
        return C_d_prime(d)

    def subset(self, *names):
        """Name-to-value map of the requested constants."""
        return {n: float(getattr(self, n)) for n in names}


DEFAULT_REGISTRY = ConstantsRegistry()


# --------------------------------------------------------------------------
# xi_S
# --------------------------------------------------------------------------

def _xi_S_scalar(y):
    y = float(y)
    if math.isnan(y) or y < 0.0:
        raise DomainError(f"xi_S needs y >= 0, got {y}")
    if y == 0.0:
        return 0.0
    if math.isinf(y):
        return _HALF_PI
    if y > _XI_S_HUGE:
        return _HALF_PI - _HALF_PI / y

    def f(t):
        return t * math.sin(t) - y * math.cos(t)

    def fp(t):
        return math.sin(t) + t * math.cos(t) + y * math.sin(t)

    hi = _HALF_PI - 1e-15
    br = RootBracket(0.0, hi, -y, f(hi))
    return find_root(f, br, tol=1e-15, fprime=fp)


def xi_S(y):
    """Smallest nonnegative root of ``xi tan xi = y``.

    Parameters
    ----------
    y : float or array_like
        Nonnegative; ``inf`` gives ``pi/2``.

    Returns
    -------
    float or ndarray
        Value in ``[0, pi/2]``, nondecreasing in ``y``.
    """
    if np.ndim(y) == 0:
        return _xi_S_scalar(y)
    arr = np.asarray(y, dtype=float)
    return np.array([_xi_S_scalar(v) for v in arr.ravel()]).reshape(arr.shape)


def xi_S_approx(y):
    """Closed-form approximation ``arctan sqrt(y + 4 y^2 / pi^2)``."""
    y = np.asarray(y, dtype=float)
    if np.any(y < 0) or np.any(np.isnan(y)):
        raise DomainError("xi_S_approx needs y >= 0")
    with np.errstate(over="ignore"):
        out = np.arctan(np.sqrt(y + 4.0 * y * y / math.pi ** 2))
    return float(out) if out.ndim == 0 else out


# --------------------------------------------------------------------------
# xi_H
# --------------------------------------------------------------------------

def _xi_H_F(alpha, t):
    # J + 2 t J' = 2 alpha J_nu - 2 t J_{nu+1} with nu = alpha - 1/2
    j0, j1 = _kernels.jv_pair(alpha - 0.5, np.array([t]))
    return 2.0 * alpha * j0[0] - 2.0 * t * j1[0]


def _xi_H_Fprime(alpha, t):
    nu = alpha - 0.5
    j0, j1 = _kernels.jv_pair(nu, np.array([t]))
    jp = nu / t * j0[0] - j1[0]
    return jp - 2.0 * t * (1.0 - nu * nu / (t * t)) * j0[0]


def _xi_H_scalar(alpha):
    alpha = float(alpha)
    if not (0.0 <= alpha <= XI_H_ALPHA_MAX):
        raise DomainError(f"xi_H needs alpha in [0, {XI_H_ALPHA_MAX:g}], got {alpha}")
    if alpha == 0.0:
        return 0.0
    if alpha >= 1.0:
        # F > 0 below the root, and the root lies above xi_H_lower
        lo = 0.5 * math.sqrt(math.pi ** 2 / 4.0 + alpha * (alpha - 1.0))
    else:
        lo = min(1e-8, 0.1 * math.sqrt(alpha))
    hi = first_bessel_zero(alpha - 0.5) - 1e-8
    br = RootBracket(lo, hi, _xi_H_F(alpha, lo), _xi_H_F(alpha, hi))
    return find_root(lambda t: _xi_H_F(alpha, t), br, tol=1e-13,
                     fprime=lambda t: _xi_H_Fprime(alpha, t))


def xi_H(alpha):
    """Smallest positive root of ``J(xi) + 2 xi J'(xi) = 0``, ``J = J_{alpha-1/2}``.

    Parameters
    ----------
    alpha : float or array_like
        Values in ``[0, 100]``. ``xi_H(0) = 0`` and ``xi_H(1) = pi/2``.
    """
    if np.ndim(alpha) == 0:
        return _xi_H_scalar(alpha)
    arr = np.asarray(alpha, dtype=float)
    return np.array([_xi_H_scalar(a) for a in arr.ravel()]).reshape(arr.shape)


def xi_H_approx_small(alpha):
    """Approximation ``sqrt(alpha + (pi^2/4 - 1) alpha^2)`` on ``[0, 1]``."""
    a = np.asarray(alpha, dtype=float)
    if np.any(a < 0) or np.any(a > 1) or np.any(np.isnan(a)):
        raise DomainError("xi_H_approx_small needs alpha in [0, 1]")
    out = np.sqrt(a + (math.pi ** 2 / 4.0 - 1.0) * a * a)
    return float(out) if out.ndim == 0 else out


def xi_H_lower(alpha):
    """Lower bound ``sqrt(pi^2/4 + alpha (alpha - 1))`` valid for ``alpha >= 1``."""
    a = np.asarray(alpha, dtype=float)
    if np.any(a < 1) or np.any(np.isnan(a)):
        raise DomainError("xi_H_lower needs alpha >= 1")
    out = np.sqrt(math.pi ** 2 / 4.0 + a * (a - 1.0))
    return float(out) if out.ndim == 0 else out


# --------------------------------------------------------------------------
# C_{alpha,N}
# --------------------------------------------------------------------------

_FLOAT_CHUNK = 1 << 20


def c_alpha_N(alpha, N):
    """Anyon exclusion constant ``min_p min_q |(2p+1) alpha - 2q|``.

    The minimum runs over ``p = 0, ..., N-2`` and integers ``q``. The inner
    minimum is the distance of ``(2p+1) alpha`` to the nearest even integer.

    Parameters
    ----------
    alpha : float or fractions.Fraction
        A ``Fraction`` (or int) is handled in exact rational arithmetic and the
        result is a ``Fraction``. Only ``nu`` values of ``p`` need checking
        then, since the residue of ``(2p+1) mu`` modulo ``2 nu`` has period
        ``nu`` in ``p``.
    N : int
        Particle number, at least 2.
    """
    if not isinstance(N, Integral) or N < 2:
        raise DomainError(f"c_alpha_N needs an integer N >= 2, got {N!r}")
    N = int(N)
    if isinstance(alpha, Rational):
        a = Fraction(alpha)
        mu, nu = a.numerator, a.denominator
        best = None
        for p in range(min(N - 1, nu)):
            r = ((2 * p + 1) * mu) % (2 * nu)
            d = min(r, 2 * nu - r)
            if best is None or d < best:
                best = d
                if d == 0:
                    break
        return Fraction(best, nu)
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise DomainError("alpha must be finite")
    best = math.inf
    for start in range(0, N - 1, _FLOAT_CHUNK):
        p = np.arange(start, min(N - 1, start + _FLOAT_CHUNK), dtype=float)
        t = (2.0 * p + 1.0) * alpha
        d = np.abs(t - 2.0 * np.round(0.5 * t))
        best = min(best, float(d.min()))
        if best == 0.0:
            break
    return best


def c_alpha_limit(mu, nu):
    """Large-N limit of :func:`c_alpha_N` for ``alpha = mu/nu`` in lowest terms.

    Returns ``Fraction(1, nu)`` for odd ``mu`` and ``Fraction(0)`` otherwise.
    """
    _check_reduced(mu, nu)
    return Fraction(1, int(nu)) if int(mu) % 2 else Fraction(0)
