"""Real-order Bessel functions, the Gamma function and bracketed root finding.

Supported Bessel domain: order in [-1/2, 120] and argument in [0, 300].
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .errors import BracketError, DomainError, RootFindingError

ORDER_MIN = -0.5
ORDER_MAX = 120.0
X_MAX = 300.0
GAMMA_MAX = 100.0


def _check_order(order):
    if not (ORDER_MIN <= order <= ORDER_MAX):
        raise DomainError(f"Bessel order must lie in [{ORDER_MIN}, {ORDER_MAX}], got {order}")


def _check_x(x):
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)) or np.any(x < 0.0) or np.any(x > X_MAX):
        raise DomainError(f"Bessel argument must lie in [0, {X_MAX}]")
    return x


def bessel_pair(order, x):
    """Return ``(J_order(x), J_{order+1}(x))`` as arrays.

    Parameters
    ----------
    order : float
        Order in [-1/2, 120].
    x : array_like
        Nonnegative arguments up to 300.
    """
    order = float(order)
    _check_order(order)
    xa = np.atleast_1d(_check_x(x)).ravel()
    if order < 0.0 and np.any(xa == 0.0):
        raise DomainError("J of negative order is singular at x = 0")
    j0, j1 = _kernels.jv_pair(order, xa)
    shape = np.shape(x)
    return j0.reshape(shape), j1.reshape(shape)


def bessel_j(order, x):
    """Bessel function of the first kind of real order.

    Parameters
    ----------
    order : float
        Order in [-1/2, 120].
    x : float or array_like
        Argument(s) in [0, 300].

    Returns
    -------
    float or ndarray
        ``J_order(x)``, absolute error below 1e-10 on the supported domain.
    """
    j0, _ = bessel_pair(order, x)
    return float(j0) if np.ndim(j0) == 0 else j0


def bessel_j_prime(order, x):
    """Derivative of :func:`bessel_j` in ``x``.

    Uses ``J'_v = (v/x) J_v - J_{v+1}``. At ``x = 0`` the limit is returned for
    orders ``>= 1`` (1/2 for order 1, 0 above); smaller orders are rejected.
    """
    order = float(order)
    _check_order(order)
    xa = np.atleast_1d(_check_x(x)).ravel()
    out = np.empty_like(xa)
    zero = xa == 0.0
    if np.any(zero):
        if order < 1.0:
            raise DomainError("derivative at x = 0 requires order >= 1")
        out[zero] = 0.5 if order == 1.0 else 0.0
    pos = ~zero
    if np.any(pos):
        j0, j1 = _kernels.jv_pair(order, xa[pos])
        out[pos] = order / xa[pos] * j0 - j1
    out = out.reshape(np.shape(x))
    return float(out) if out.ndim == 0 else out


def gamma_fn(x):
    """Gamma function on (0, 100].

    Thin wrapper over :func:`math.gamma` that enforces the domain.
    """
    x = float(x)
    if not (0.0 < x <= GAMMA_MAX):
        raise DomainError(f"gamma_fn requires x in (0, {GAMMA_MAX}], got {x}")
    return math.gamma(x)


@dataclass(frozen=True)
class RootBracket:
    """Interval ``[lo, hi]`` on which ``f`` changes sign."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise BracketError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if not (np.sign(self.f_lo) * np.sign(self.f_hi) < 0):
            raise BracketError(
                f"f has no strict sign change on [{self.lo}, {self.hi}]: "
                f"f_lo={self.f_lo}, f_hi={self.f_hi}"
            )

    @classmethod
    def from_function(cls, f, lo, hi):
        return cls(float(lo), float(hi), float(f(lo)), float(f(hi)))


def find_root(f: Callable[[float], float], bracket: RootBracket, tol: float = 1e-12,
              fprime: Callable[[float], float] | None = None, max_iter: int = 400,
              full_output: bool = False):
    """Safeguarded Newton/bisection on a sign-change bracket.

    Each step tries a Newton update when ``fprime`` is available and the
    update lands inside the bracket, and bisects otherwise. After a Newton
    step the points ``x -/+ tol/2`` are probed so the bracket shrinks to width
    ``tol`` around the root.

    Parameters
    ----------
    f : callable
        Scalar function.
    bracket : RootBracket
        Initial bracket; ``f(lo)`` and ``f(hi)`` have opposite signs.
    tol : float
        Target bracket width.
    fprime : callable, optional
        Derivative of ``f`` for Newton acceleration.
    full_output : bool
        Also return the final :class:`RootBracket` (or an exact-zero marker).

    Returns
    -------
    float or (float, RootBracket | None)
        Midpoint of the final bracket. When ``f`` vanishes exactly at an
        evaluation point, that point is returned and the bracket is None.
    """
    if tol <= 0.0:
        raise BracketError("tol must be positive")
    lo, hi = bracket.lo, bracket.hi
    s_lo = math.copysign(1.0, bracket.f_lo)
    x = 0.5 * (lo + hi)

    def done(root, br):
        return (root, br) if full_output else root

    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        x_new = None
        if fprime is not None:
            fx = f(x)
            if fx == 0.0:
                return done(x, None)
            d = fprime(x)
            if d != 0.0 and math.isfinite(d):
                cand = x - fx / d
                if lo < cand < hi:
                    x_new = cand
            if math.copysign(1.0, fx) == s_lo:
                lo = max(lo, x)
            else:
                hi = min(hi, x)
        if x_new is not None:
            # probe both sides of the Newton point so the bracket can close
            for probe in (x_new - 0.5 * tol, x_new + 0.5 * tol):
                if lo < probe < hi:
                    fp = f(probe)
                    if fp == 0.0:
                        return done(probe, None)
                    if math.copysign(1.0, fp) == s_lo:
                        lo = probe
                    else:
                        hi = probe
            x = min(max(x_new, lo), hi)
            if not (lo < x < hi):
                x = 0.5 * (lo + hi)
            continue
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return done(mid, None)
        if math.copysign(1.0, fm) == s_lo:
            lo = mid
        else:
            hi = mid
        x = 0.5 * (lo + hi)
    else:
        if hi - lo > tol:
            raise RootFindingError(f"no convergence to width {tol} after {max_iter} steps")
    root = float(0.5 * (lo + hi))
    if not full_output:
        return root
    flo, fhi = f(lo), f(hi)
    try:
        br = RootBracket(lo, hi, flo, fhi)
    except BracketError:
        br = None
    return root, br


def first_bessel_zero(order, tol=1e-13):
    """Smallest positive zero of ``J_order``.

    Scans from 0.05 in steps of 0.1 up to ``3 (order + 10)`` for the first sign
    change, then refines with :func:`find_root`.
    """
    order = float(order)
    _check_order(order)
    limit = min(3.0 * (order + 10.0), X_MAX)
    grid = np.arange(0.05, limit + 0.1, 0.1)
    grid = grid[grid <= X_MAX]
    vals, _ = _kernels.jv_pair(order, grid)
    flips = np.nonzero(np.sign(vals[1:]) * np.sign(vals[:-1]) < 0)[0]
    if flips.size == 0:
        raise RootFindingError(f"no zero of J_{order} found below {limit}")
    i = int(flips[0])

    def f(t):
        return float(_kernels.jv_pair(order, np.array([t]))[0][0])

    def fp(t):
        j0, j1 = _kernels.jv_pair(order, np.array([t]))
        return float(order / t * j0[0] - j1[0])

    br = RootBracket(grid[i], grid[i + 1], vals[i], vals[i + 1])
    return find_root(f, br, tol=tol, fprime=fp)
