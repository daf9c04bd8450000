"""Pure-numpy implementations of the kernels in ``_numba.py``."""
import math

import numpy as np
from scipy.linalg import eigh_tridiagonal

_RESCALE = 1e250
_TINY = 1e-30


def _series_j(nu, x):
    """Ascending series, vectorized over ``x``, with Neumaier summation."""
    x = np.asarray(x, dtype=float)
    q = -0.25 * x * x
    term = np.ones_like(x)
    s = np.ones_like(x)
    c = np.zeros_like(x)
    for k in range(1, 1001):
        term = term * q / (k * (nu + k))
        t = s + term
        big = np.abs(s) >= np.abs(term)
        c += np.where(big, (s - t) + term, (term - t) + s)
        s = t
        if k > 2 and np.all(np.abs(term) < 1e-17 * np.abs(s)):
            break
    return np.exp(nu * np.log(0.5 * x) - math.lgamma(nu + 1.0)) * (s + c)


def _miller_pair(nu, x):
    """Backward recurrence, vectorized over ``x`` with a common start index."""
    x = np.asarray(x, dtype=float)
    base = math.floor(nu)
    nu0 = nu - base
    m = int(base)
    xm = float(np.max(x))
    top = int(max(m + 2.0, xm) + 40.0 + 8.0 * xm ** (1.0 / 3.0))
    if top % 2 == 1:
        top += 1
    j_hi = np.zeros_like(x)
    j_k = np.full_like(x, _TINY)
    norm = np.zeros_like(x)
    cap_m = np.zeros_like(x)
    cap_m1 = np.zeros_like(x)
    g = math.exp(math.lgamma(nu0 + top // 2) - math.lgamma(top // 2 + 1.0))
    for k in range(top, -1, -1):
        if k % 2 == 0:
            j = k // 2
            if j == 0:
                w = math.gamma(nu0 + 1.0)
            else:
                w = (nu0 + 2.0 * j) * g
                if j > 1:
                    g *= j / (nu0 + j - 1.0)
            norm = norm + w * j_k
        if k == m + 1:
            cap_m1 = j_k.copy()
        if k == m:
            cap_m = j_k.copy()
        j_lo = 2.0 * (nu0 + k) / x * j_k - j_hi
        if k == 0:
            if m == -1:
                cap_m = j_lo
            break
        j_hi, j_k = j_k, j_lo
        big = np.abs(j_k) > _RESCALE
        if np.any(big):
            f = np.where(big, 1.0 / _RESCALE, 1.0)
            j_k = j_k * f
            j_hi = j_hi * f
            norm = norm * f
            cap_m = cap_m * f
            cap_m1 = cap_m1 * f
    scale = (0.5 * x) ** nu0 / norm
    return cap_m * scale, cap_m1 * scale


def _series_scalar(nu, x):
    q = -0.25 * x * x
    term = s = 1.0
    c = 0.0
    for k in range(1, 1001):
        term *= q / (k * (nu + k))
        t = s + term
        c += (s - t) + term if abs(s) >= abs(term) else (term - t) + s
        s = t
        if k > 2 and abs(term) < 1e-17 * abs(s):
            break
    return math.exp(nu * math.log(0.5 * x) - math.lgamma(nu + 1.0)) * (s + c)


def _miller_scalar(nu, x):
    base = math.floor(nu)
    nu0 = nu - base
    m = int(base)
    top = int(max(m + 2.0, x) + 40.0 + 8.0 * x ** (1.0 / 3.0))
    top += top % 2
    j_hi, j_k = 0.0, _TINY
    norm = cap_m = cap_m1 = 0.0
    g = math.exp(math.lgamma(nu0 + top // 2) - math.lgamma(top // 2 + 1.0))
    for k in range(top, -1, -1):
        if k % 2 == 0:
            j = k // 2
            if j == 0:
                norm += math.gamma(nu0 + 1.0) * j_k
            else:
                norm += (nu0 + 2.0 * j) * g * j_k
                if j > 1:
                    g *= j / (nu0 + j - 1.0)
        if k == m + 1:
            cap_m1 = j_k
        if k == m:
            cap_m = j_k
        j_lo = 2.0 * (nu0 + k) / x * j_k - j_hi
        if k == 0:
            if m == -1:
                cap_m = j_lo
            break
        j_hi, j_k = j_k, j_lo
        if abs(j_k) > _RESCALE:
            j_k /= _RESCALE
            j_hi /= _RESCALE
            norm /= _RESCALE
            cap_m /= _RESCALE
            cap_m1 /= _RESCALE
    scale = (0.5 * x) ** nu0 / norm
    return cap_m * scale, cap_m1 * scale


# below this many points, plain float loops beat array operations
_SCALAR_CUTOFF = 8


def _jv_pair_small(nu, x):
    out0 = np.empty_like(x)
    out1 = np.empty_like(x)
    for i, t in enumerate(x.tolist()):
        if t == 0.0:
            out0[i] = 1.0 if nu == 0.0 else (0.0 if nu > 0.0 else math.inf)
            out1[i] = 0.0
        elif t <= 12.0 or 0.25 * t * t <= nu + 1.0:
            out0[i] = _series_scalar(nu, t)
            out1[i] = _series_scalar(nu + 1.0, t)
        else:
            out0[i], out1[i] = _miller_scalar(nu, t)
    return out0, out1


def jv_pair(nu, x):
    """J_nu(x) and J_{nu+1}(x) for an array of arguments."""
    x = np.asarray(x, dtype=float)
    if x.size <= _SCALAR_CUTOFF:
        return _jv_pair_small(nu, x)
    out0 = np.empty_like(x)
    out1 = np.empty_like(x)
    zero = x == 0.0
    if np.any(zero):
        out0[zero] = 1.0 if nu == 0.0 else (0.0 if nu > 0.0 else math.inf)
        out1[zero] = 0.0
    ser = ~zero & ((x <= 12.0) | (0.25 * x * x <= nu + 1.0))
    if np.any(ser):
        out0[ser] = _series_j(nu, x[ser])
        out1[ser] = _series_j(nu + 1.0, x[ser])
    mil = ~zero & ~ser
    if np.any(mil):
        a, b = _miller_pair(nu, x[mil])
        out0[mil] = a
        out1[mil] = b
    return out0, out1


def tridiag_lowest(d, e):
    """Lowest eigenpair through LAPACK's tridiagonal driver."""
    d = np.asarray(d, dtype=float)
    e = np.asarray(e, dtype=float)
    if d.shape[0] == 1:
        return float(d[0]), np.ones(1)
    w, v = eigh_tridiagonal(d, e, select="i", select_range=(0, 0))
    vec = v[:, 0]
    vec = vec / np.max(np.abs(vec))
    if vec[np.argmax(np.abs(vec))] < 0.0:
        vec = -vec
    return float(w[0]), vec


def _series_start(alpha, lams, t0):
    lams = np.asarray(lams, dtype=float)
    w = np.ones_like(lams)
    ws = np.zeros_like(lams)
    c = np.ones_like(lams)
    t2 = t0 * t0
    p = 1.0
    for k in range(1, 60):
        c = -lams * c / (2.0 * k * (2.0 * k + 2.0 * alpha - 1.0))
        p *= t2
        term = c * p
        w = w + term
        ws = ws + 2.0 * k * term
        if np.all(np.abs(term) < 1e-18 * np.abs(w)):
            break
    return w, ws


def shoot_neumann(alpha, lams, n_steps, t0):
    """Neumann mismatch alpha*w(1) + w'(1) for each trial eigenvalue."""
    lams = np.asarray(lams, dtype=float)
    w, ws = _series_start(alpha, lams, t0)
    s = math.log(t0)
    h = -s / n_steps
    damp = 2.0 * alpha - 1.0
    for _ in range(n_steps):
        e0 = lams * math.exp(2.0 * s)
        em = lams * math.exp(2.0 * (s + 0.5 * h))
        e1 = lams * math.exp(2.0 * (s + h))
        k1w = ws
        k1v = -damp * ws - e0 * w
        k2w = ws + 0.5 * h * k1v
        k2v = -damp * k2w - em * (w + 0.5 * h * k1w)
        k3w = ws + 0.5 * h * k2v
        k3v = -damp * k3w - em * (w + 0.5 * h * k2w)
        k4w = ws + h * k3v
        k4v = -damp * k4w - e1 * (w + h * k3w)
        w = w + h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w)
        ws = ws + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        s += h
    return alpha * w + ws


_BLOCK_ELEMS = 1 << 22


def _row_block(n):
    return max(1, _BLOCK_ELEMS // (n + 1))


def maximal_cell_lower(edges, prefix, values):
    """Max mean over intervals [B_j, B_k] covering cell i, i.e. j <= i < k."""
    n = values.shape[0]
    res = values.astype(float).copy()
    cells = np.arange(n)
    step = _row_block(n)
    for j0 in range(0, n, step):
        j = np.arange(j0, min(n, j0 + step))
        k = np.arange(n + 1)
        with np.errstate(divide="ignore", invalid="ignore"):
            means = (prefix[None, :] - prefix[j, None]) / (edges[None, :] - edges[j, None])
        means[k[None, :] <= j[:, None]] = -np.inf
        suf = np.maximum.accumulate(means[:, ::-1], axis=1)[:, ::-1]
        cand = np.where(j[:, None] <= cells[None, :], suf[:, 1:], -np.inf)
        res = np.maximum(res, cand.max(axis=0))
    return res


def maximal_center(edges, prefix, values):
    """Exact uncentered maximal function at each cell centre."""
    n = values.shape[0]
    res = maximal_cell_lower(edges, prefix, values)
    c = 0.5 * (edges[:-1] + edges[1:])
    pc = prefix[:-1] + values * (c - edges[:-1])
    cells = np.arange(n)
    step = _row_block(n)
    for b0 in range(0, n + 1, step):
        b = np.arange(b0, min(n + 1, b0 + step))
        with np.errstate(divide="ignore", invalid="ignore"):
            left = (pc[None, :] - prefix[b, None]) / (c[None, :] - edges[b, None])
            right = (prefix[b, None] - pc[None, :]) / (edges[b, None] - c[None, :])
        left = np.where(b[:, None] <= cells[None, :], left, -np.inf)
        right = np.where(b[:, None] >= cells[None, :] + 1, right, -np.inf)
        res = np.maximum(res, np.maximum(left.max(axis=0), right.max(axis=0)))
    return res
