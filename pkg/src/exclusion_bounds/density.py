"""Piecewise-constant densities, their maximal function and density bounds.

Densities live on a uniform grid of cells. Masses of arbitrary subintervals
are then exact functions of the cell values, which the dyadic split tree
exploits: all threshold comparisons use rational arithmetic, so the tree is
reproducible bit for bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import DomainError, InapplicableBoundError
from .exclusion import (
    DEFAULT_REGISTRY,
    ConstantsRegistry,
    StatisticsKind,
    StatisticsParams,
    xi_H,
    xi_S,
)
from .report import BoundReport

SPLIT_DEPTH_CAP = 40
_B_LOW = 2
_B_HIGH = 4


@dataclass(frozen=True, eq=False)
class DensityProfile:
    """Nonnegative density, constant on each of ``len(cells)`` equal cells of ``[x0, x1]``.

    The density is zero outside ``[x0, x1]``.
    """

    x0: float
    x1: float
    cells: np.ndarray
    mass: float = field(init=False)

    def __post_init__(self):
        x0, x1 = float(self.x0), float(self.x1)
        if not (math.isfinite(x0) and math.isfinite(x1) and x1 > x0):
            raise DomainError("density support needs finite x0 < x1")
        cells = np.array(self.cells, dtype=float).ravel()
        if cells.size == 0:
            raise DomainError("density needs at least one cell")
        if not np.all(np.isfinite(cells)) or np.any(cells < 0):
            raise DomainError("density values must be finite and nonnegative")
        cells.setflags(write=False)
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "mass", float(math.fsum(cells)) * self.width)

    @classmethod
    def from_centers(cls, x, rho, rtol=1e-9):
        """Build a profile from uniformly spaced cell centres."""
        x = np.asarray(x, dtype=float)
        rho = np.asarray(rho, dtype=float)
        if x.ndim != 1 or x.shape != rho.shape or x.size == 0:
            raise DomainError("centres and values must be 1D arrays of equal length")
        if x.size == 1:
            raise DomainError("cannot infer a cell width from a single centre")
        dx = np.diff(x)
        w = (x[-1] - x[0]) / (x.size - 1)
        if w <= 0 or np.any(np.abs(dx - w) > rtol * max(abs(w), 1.0) + 1e-12 * np.abs(x[1:]).max()):
            raise DomainError("cell centres must be strictly increasing and uniformly spaced")
        return cls(x[0] - 0.5 * w, x[-1] + 0.5 * w, rho)

    @classmethod
    def uniform(cls, rhobar, x0, x1, n=1):
        return cls(x0, x1, np.full(int(n), float(rhobar)))

    @property
    def n(self):
        return self.cells.size

    @property
    def width(self):
        return (self.x1 - self.x0) / self.cells.size

    @property
    def edges(self):
        return self.x0 + self.width * np.arange(self.n + 1)

    @property
    def centers(self):
        return self.x0 + self.width * (np.arange(self.n) + 0.5)

    def prefix(self):
        """Cumulative masses at the cell edges."""
        return np.concatenate(([0.0], np.cumsum(self.cells) * self.width))

    def integral_cube(self):
        return float(np.sum(self.cells ** 3) * self.width)


@dataclass(frozen=True, eq=False)
class StepDensity:
    """Density constant on consecutive, possibly unequal, intervals."""

    edges: np.ndarray
    values: np.ndarray
    exact_cube_integral: Fraction | None = None

    def __post_init__(self):
        e = np.asarray(self.edges, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if e.ndim != 1 or v.ndim != 1 or e.size != v.size + 1 or v.size == 0:
            raise DomainError("need len(edges) == len(values) + 1 >= 2")
        if np.any(np.diff(e) <= 0):
            raise DomainError("edges must be strictly increasing")
        object.__setattr__(self, "edges", e)
        object.__setattr__(self, "values", v)

    @property
    def mass(self):
        return float(np.sum(self.values * np.diff(self.edges)))

    def integral_cube(self):
        if self.exact_cube_integral is not None:
            return float(self.exact_cube_integral)
        return float(np.sum(self.values ** 3 * np.diff(self.edges)))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        idx = np.searchsorted(self.edges, x, side="right") - 1
        inside = (idx >= 0) & (idx < self.values.size)
        out = np.zeros_like(x)
        out[inside] = self.values[idx[inside]]
        return out


# --------------------------------------------------------------------------
# Maximal function
# --------------------------------------------------------------------------

MAXIMAL_MODES = ("center", "cell_lower", "cell_sup")


def maximal_function(rho: DensityProfile, mode="center"):
    """Uncentered Hardy-Littlewood maximal function of a step density.

    Parameters
    ----------
    rho : DensityProfile
    mode : {"center", "cell_lower", "cell_sup"}
        ``"center"`` gives the exact value of ``rho*`` at each cell centre:
        the supremum of interval means over intervals containing the centre.
        For a step density the supremum is attained with each endpoint either
        at a cell edge or at the centre itself.
        ``"cell_lower"`` restricts to intervals with edge endpoints that cover
        the whole cell, which gives ``min rho*`` over the cell.
        ``"cell_sup"`` gives ``max rho*`` over the closed cell. Every
        interval meeting the closed cell covers the cell or one of its
        neighbours, so this is the largest ``"cell_lower"`` value among the
        cell and its two neighbours.

    Returns
    -------
    DensityProfile
        Same grid as ``rho``.
    """
    edges = rho.edges
    prefix = rho.prefix()
    values = np.ascontiguousarray(rho.cells, dtype=float)
    if mode == "center":
        out = _kernels.maximal_center(edges, prefix, values)
    elif mode in ("cell_lower", "cell_sup"):
        out = np.maximum(_kernels.maximal_cell_lower(edges, prefix, values), values)
        if mode == "cell_sup" and out.size > 1:
            low = out.copy()
            out[1:] = np.maximum(out[1:], low[:-1])
            out[:-1] = np.maximum(out[:-1], low[1:])
    else:
        raise DomainError(f"mode must be one of {MAXIMAL_MODES}")
    return DensityProfile(rho.x0, rho.x1, np.maximum(out, values))


# --------------------------------------------------------------------------
# Dyadic split tree
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitNode:
    lo: Fraction
    hi: Fraction
    mass: Fraction
    label: str  # "Internal", "A" or "B"
    depth: int
    children: tuple[int, ...] = ()

    @property
    def length(self):
        return self.hi - self.lo


@dataclass(frozen=True)
class SplitTree:
    """Dyadic halving of ``Q0`` until every leaf has mass below 4.

    Leaves with mass in ``[2, 4)`` are labelled ``B`` and the rest ``A``.
    ``nodes[0]`` is the root and nodes are stored in preorder.
    """

    q0: tuple[Fraction, Fraction]
    nodes: tuple[SplitNode, ...]

    @property
    def root(self):
        return self.nodes[0]

    @property
    def leaves(self):
        return [nd for nd in self.nodes if nd.label != "Internal"]

    def leaves_labelled(self, label):
        return [nd for nd in self.nodes if nd.label == label]

    @property
    def depth(self):
        return max(nd.depth for nd in self.nodes)


class _ExactMass:
    """Exact cumulative mass ``P(x) = int_{-inf}^x rho`` for a step density."""

    def __init__(self, rho: DensityProfile):
        self.x0 = Fraction(rho.x0)
        self.x1 = Fraction(rho.x1)
        self.n = rho.n
        self.w = (self.x1 - self.x0) / self.n
        self.vals = [Fraction(v) for v in rho.cells.tolist()]
        acc = Fraction(0)
        pre = [acc]
        for v in self.vals:
            acc += v * self.w
            pre.append(acc)
        self.pre = pre

    def P(self, x: Fraction):
        if x <= self.x0:
            return Fraction(0)
        if x >= self.x1:
            return self.pre[-1]
        i = math.floor((x - self.x0) / self.w)
        i = min(i, self.n - 1)
        return self.pre[i] + self.vals[i] * (x - (self.x0 + i * self.w))


def split_tree(rho: DensityProfile, q0: Sequence[float] | None = None):
    """Dyadic split tree of ``q0`` (default: the support of ``rho``).

    An interval of mass below 2 is an A-leaf, one of mass in ``[2, 4)`` is a
    B-leaf, and heavier intervals are halved. Masses are exact rationals.

    Raises
    ------
    InapplicableBoundError
        If the mass in ``q0`` is below 2.
    DomainError
        If an interval of mass at least 4 survives to depth 40.
    """
    if q0 is None:
        q0 = (rho.x0, rho.x1)
    a, b = (Fraction(float(q0[0])), Fraction(float(q0[1])))
    if not b > a:
        raise DomainError("Q0 needs lo < hi")
    P = _ExactMass(rho)
    total = P.P(b) - P.P(a)
    if total < _B_LOW:
        raise InapplicableBoundError(
            f"mass in Q0 is {float(total):.6g} < 2; the split-tree bound does not apply"
        )
    nodes: list = []

    def build(lo, hi, mass, depth):
        idx = len(nodes)
        if mass < _B_LOW:
            nodes.append(SplitNode(lo, hi, mass, "A", depth))
            return idx
        if mass < _B_HIGH:
            nodes.append(SplitNode(lo, hi, mass, "B", depth))
            return idx
        if depth >= SPLIT_DEPTH_CAP:
            raise DomainError("split tree exceeded depth 40 with an interval of mass >= 4")
        nodes.append(None)
        mid = (lo + hi) / 2
        m_left = P.P(mid) - P.P(lo)
        left = build(lo, mid, m_left, depth + 1)
        right = build(mid, hi, mass - m_left, depth + 1)
        nodes[idx] = SplitNode(lo, hi, mass, "Internal", depth, (left, right))
        return idx

    build(a, b, total, 0)
    return SplitTree((a, b), tuple(nodes))


def rho_tilde(tree: SplitTree, rho: DensityProfile | None = None):
    """Leaf averages of ``rho`` on the split tree.

    Returns a :class:`StepDensity` on ``Q0`` (zero outside) whose value on
    each leaf is that leaf's mean density. ``exact_cube_integral`` holds
    ``sum m^3 / |Q|^2`` in rational arithmetic.
    """
    leaves = sorted(tree.leaves, key=lambda nd: nd.lo)
    edges = [float(leaves[0].lo)] + [float(nd.hi) for nd in leaves]
    values = [float(nd.mass / nd.length) for nd in leaves]
    cube = sum((nd.mass ** 3 / nd.length ** 2 for nd in leaves), Fraction(0))
    return StepDensity(np.array(edges), np.array(values), cube)


# --------------------------------------------------------------------------
# Density bounds
# --------------------------------------------------------------------------

def _xi_S_cells(eta, rstar):
    """``xi_S(2 eta / rho*)`` per cell, computed once per distinct argument."""
    out = np.zeros_like(rstar)
    pos = rstar > 0
    if not np.any(pos):
        return out
    if math.isinf(eta):
        out[pos] = 0.5 * math.pi
        return out
    with np.errstate(over="ignore"):
        # a tiny rho* gives an infinite argument, where xi_S is pi/2
        args = 2.0 * eta / rstar[pos]
    uniq, inv = np.unique(args, return_inverse=True)
    out[pos] = xi_S(uniq)[inv]
    return out


def ll_density_bound(rho: DensityProfile, eta, registry: ConstantsRegistry = DEFAULT_REGISTRY,
                     maximal_mode="cell_sup"):
    """Kinetic lower bound for Lieb-Liniger statistics.

    ``C_S * sum_cells xi_S(2 eta / rho*)^2 rho^3 dx``. Cells with ``rho = 0``
    contribute nothing. The integrand decreases as ``rho*`` grows, so the
    default ``maximal_mode`` takes the largest value of ``rho*`` on each
    cell and the sum never exceeds the pointwise integral.

    Parameters
    ----------
    rho : DensityProfile
    eta : float
        Coupling, ``>= 0``; ``inf`` is the fermionic limit.
    """
    eta = float(eta)
    stats = StatisticsParams(StatisticsKind.LIEB_LINIGER, eta=eta)
    rstar = maximal_function(rho, maximal_mode).cells
    xi = _xi_S_cells(eta, rstar)
    integrand = xi * xi * rho.cells ** 3
    integral = float(np.sum(integrand) * rho.width)
    C_S = registry.C_S
    return BoundReport(
        value=C_S * integral,
        statistics=stats,
        constants_used={"C_S": C_S},
        diagnostics={
            "integral_xi2_rho3": integral,
            "integral_rho3": rho.integral_cube(),
            "mass": rho.mass,
            "rho_star_max": float(rstar.max()),
            "maximal_mode": maximal_mode,
            "cells": rho.n,
        },
    )


def cs_density_bound(rho: DensityProfile, alpha, q0=None,
                     registry: ConstantsRegistry = DEFAULT_REGISTRY):
    """Kinetic lower bound for Calogero-Sutherland statistics on ``Q0``.

    ``C_H xi_H(alpha)^2 int_{Q0} rho_tilde^3`` with ``rho_tilde`` the leaf
    averages of the split tree. The diagnostics also carry the weaker
    ``C_H xi_H(alpha)^2 (int_{Q0} rho)^3 / |Q0|^2``.

    Raises
    ------
    InapplicableBoundError
        If ``alpha < 1`` or the mass in ``Q0`` is below 2.
    """
    alpha = float(alpha)
    if not alpha >= 1.0:
        raise InapplicableBoundError(f"the bound requires alpha >= 1, got {alpha}")
    stats = StatisticsParams(StatisticsKind.CALOGERO_SUTHERLAND, alpha=alpha)
    tree = split_tree(rho, q0)
    rt = rho_tilde(tree, rho)
    cube = rt.integral_cube()
    a, b = tree.q0
    mass = tree.root.mass
    weak = float(mass ** 3 / (b - a) ** 2)
    xi = xi_H(alpha)
    C_H = registry.C_H
    return BoundReport(
        value=C_H * xi * xi * cube,
        statistics=stats,
        constants_used={"C_H": C_H},
        diagnostics={
            "xi_H": xi,
            "integral_rho_tilde3": cube,
            "weak_integral": weak,
            "weak_value": C_H * xi * xi * weak,
            "mass_Q0": float(mass),
            "Q0": [float(a), float(b)],
            "leaves_A": len(tree.leaves_labelled("A")),
            "leaves_B": len(tree.leaves_labelled("B")),
            "tree_depth": tree.depth,
        },
    )
