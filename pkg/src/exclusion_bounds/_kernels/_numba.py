"""numba-compiled inner loops.

Every function here has a counterpart with the same signature and semantics
in ``_numpy.py``; ``tests/test_kernels.py`` checks the two agree.
"""
import math

import numpy as np
from numba import njit

JIT_OPTIONS = {"nogil": True, "cache": True}

_RESCALE = 1e250
_TINY = 1e-30


# --------------------------------------------------------------------------
# Bessel J of real order
# --------------------------------------------------------------------------

@njit(**JIT_OPTIONS)
def _series_j(nu, x):
    """Ascending series with Neumaier-compensated summation."""
    q = -0.25 * x * x
    term = 1.0
    s = 1.0
    c = 0.0
    k = 0
    while True:
        k += 1
        term *= q / (k * (nu + k))
        t = s + term
        if abs(s) >= abs(term):
            c += (s - t) + term
        else:
            c += (term - t) + s
        s = t
        if abs(term) < 1e-17 * abs(s) and k > 2:
            break
        if k > 1000:
            break
    return math.exp(nu * math.log(0.5 * x) - math.lgamma(nu + 1.0)) * (s + c)


@njit(**JIT_OPTIONS)
def _miller_pair(nu, x):
    base = math.floor(nu)
    nu0 = nu - base
    m = int(base)  # -1 only for nu = -1/2
    top = int(max(m + 2.0, x) + 40.0 + 8.0 * x ** (1.0 / 3.0))
    if top % 2 == 1:
        top += 1

    j_hi = 0.0          # ladder value at index k+1
    j_k = _TINY         # ladder value at index k
    norm = 0.0
    cap_m = 0.0
    cap_m1 = 0.0
    if top == m + 1:
        cap_m1 = j_k
    # g = Gamma(nu0 + j) / j! for j = k / 2, stepped down by its ratio
    g = math.exp(math.lgamma(nu0 + top // 2) - math.lgamma(top // 2 + 1.0))
    k = top
    while k >= 0:
        if k % 2 == 0:
            j = k // 2
            if j == 0:
                w = math.gamma(nu0 + 1.0)
            else:
                w = (nu0 + 2.0 * j) * g
                if j > 1:
                    g *= j / (nu0 + j - 1.0)
            norm += w * j_k
        if k == m + 1:
            cap_m1 = j_k
        if k == m:
            cap_m = j_k
        j_lo = 2.0 * (nu0 + k) / x * j_k - j_hi
        if k == 0:
            if m == -1:
                cap_m = j_lo
            break
        j_hi = j_k
        j_k = j_lo
        k -= 1
        if abs(j_k) > _RESCALE:
            j_k /= _RESCALE
            j_hi /= _RESCALE
            norm /= _RESCALE
            cap_m /= _RESCALE
            cap_m1 /= _RESCALE
    scale = (0.5 * x) ** nu0 / norm
    return cap_m * scale, cap_m1 * scale


@njit(**JIT_OPTIONS)
def _jv_pair_scalar(nu, x):
    if x == 0.0:
        if nu == 0.0:
            return 1.0, 0.0
        if nu > 0.0:
            return 0.0, 0.0
        return math.inf, 0.0
    if x <= 12.0 or 0.25 * x * x <= nu + 1.0:
        return _series_j(nu, x), _series_j(nu + 1.0, x)
    return _miller_pair(nu, x)


@njit(**JIT_OPTIONS)
def jv_pair(nu, x):
    """J_nu(x) and J_{nu+1}(x) for an array of arguments."""
    out0 = np.empty(x.shape[0])
    out1 = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        a, b = _jv_pair_scalar(nu, x[i])
        out0[i] = a
        out1[i] = b
    return out0, out1


# --------------------------------------------------------------------------
# Lowest eigenpair of a symmetric tridiagonal matrix
# --------------------------------------------------------------------------

@njit(**JIT_OPTIONS)
def _sturm_count(d, e, sigma):
    n = d.shape[0]
    count = 0
    q = d[0] - sigma
    if q < 0.0:
        count += 1
    for i in range(1, n):
        if q == 0.0:
            q = 1e-300
        q = d[i] - sigma - e[i - 1] * e[i - 1] / q
        if q < 0.0:
            count += 1
    return count


@njit(**JIT_OPTIONS)
def _thomas(d, e, sigma, rhs):
    n = d.shape[0]
    cp = np.empty(n)
    x = np.empty(n)
    piv = d[0] - sigma
    if piv == 0.0:
        piv = 1e-300
    cp[0] = e[0] / piv if n > 1 else 0.0
    x[0] = rhs[0] / piv
    for i in range(1, n):
        piv = d[i] - sigma - e[i - 1] * cp[i - 1]
        if piv == 0.0:
            piv = 1e-300
        if i < n - 1:
            cp[i] = e[i] / piv
        x[i] = (rhs[i] - e[i - 1] * x[i - 1]) / piv
    for i in range(n - 2, -1, -1):
        x[i] -= cp[i] * x[i + 1]
    return x


@njit(**JIT_OPTIONS)
def tridiag_lowest(d, e):
    """Sturm bisection for the lowest eigenvalue, inverse iteration for its vector."""
    n = d.shape[0]
    lo = math.inf
    hi = -math.inf
    for i in range(n):
        r = 0.0
        if i > 0:
            r += abs(e[i - 1])
        if i < n - 1:
            r += abs(e[i])
        lo = min(lo, d[i] - r)
        hi = max(hi, d[i] + r)
    span = max(abs(lo), abs(hi), 1e-300)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo <= 2e-16 * span:
            break
        if _sturm_count(d, e, mid) >= 1:
            hi = mid
        else:
            lo = mid
    lam = 0.5 * (lo + hi)
    v = np.ones(n)
    shift = lo - 4e-16 * span
    for _ in range(3):
        v = _thomas(d, e, shift, v)
        v /= np.max(np.abs(v))
    if v[np.argmax(np.abs(v))] < 0.0:
        v = -v
    return lam, v


# --------------------------------------------------------------------------
# Shooting for the regular radial solution of w'' + (2 alpha / t) w' + L w = 0
# --------------------------------------------------------------------------

@njit(**JIT_OPTIONS)
def _series_start(alpha, lam, t0):
    w = 1.0
    ws = 0.0
    c = 1.0
    t2 = t0 * t0
    p = 1.0
    for k in range(1, 60):
        c = -lam * c / (2.0 * k * (2.0 * k + 2.0 * alpha - 1.0))
        p *= t2
        term = c * p
        w += term
        ws += 2.0 * k * term
        if abs(term) < 1e-18 * abs(w):
            break
    return w, ws


@njit(**JIT_OPTIONS)
def _shoot_one(alpha, lam, n_steps, t0):
    # log-radius s = ln t turns the 2 alpha / t pole into a constant damping
    w, ws = _series_start(alpha, lam, t0)
    s = math.log(t0)
    h = -s / n_steps
    damp = 2.0 * alpha - 1.0
    for _ in range(n_steps):
        e0 = lam * math.exp(2.0 * s)
        em = lam * math.exp(2.0 * (s + 0.5 * h))
        e1 = lam * math.exp(2.0 * (s + h))
        k1w = ws
        k1v = -damp * ws - e0 * w
        k2w = ws + 0.5 * h * k1v
        k2v = -damp * k2w - em * (w + 0.5 * h * k1w)
        k3w = ws + 0.5 * h * k2v
        k3v = -damp * k3w - em * (w + 0.5 * h * k2w)
        k4w = ws + h * k3v
        k4v = -damp * k4w - e1 * (w + h * k3w)
        w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w)
        ws += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        s += h
    return alpha * w + ws


@njit(**JIT_OPTIONS)
def shoot_neumann(alpha, lams, n_steps, t0):
    """Neumann mismatch alpha*w(1) + w'(1) for each trial eigenvalue."""
    out = np.empty(lams.shape[0])
    for i in range(lams.shape[0]):
        out[i] = _shoot_one(alpha, lams[i], n_steps, t0)
    return out


# --------------------------------------------------------------------------
# Hardy-Littlewood maximal function of a piecewise-constant density
# --------------------------------------------------------------------------

@njit(**JIT_OPTIONS)
def maximal_cell_lower(edges, prefix, values):
    """Max mean over intervals [B_j, B_k] covering cell i, i.e. j <= i < k."""
    n = values.shape[0]
    res = values.copy()
    suf = np.empty(n + 1)
    for j in range(n):
        # suffix maxima over right endpoints k >= j+1
        best = -math.inf
        for k in range(n, j, -1):
            m = (prefix[k] - prefix[j]) / (edges[k] - edges[j])
            if m > best:
                best = m
            suf[k] = best
        for i in range(j, n):
            if suf[i + 1] > res[i]:
                res[i] = suf[i + 1]
    return res


@njit(**JIT_OPTIONS)
def maximal_center(edges, prefix, values):
    """Exact uncentered maximal function at each cell centre."""
    n = values.shape[0]
    res = maximal_cell_lower(edges, prefix, values)
    for i in range(n):
        c = 0.5 * (edges[i] + edges[i + 1])
        pc = prefix[i] + values[i] * (c - edges[i])
        r = res[i]
        for j in range(i + 1):
            m = (pc - prefix[j]) / (c - edges[j])
            if m > r:
                r = m
        for k in range(i + 1, n + 1):
            m = (prefix[k] - pc) / (edges[k] - c)
            if m > r:
                r = m
        res[i] = r
    return res
