import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from exclusion_bounds.density import (
    DensityProfile,
    StepDensity,
    cs_density_bound,
    ll_density_bound,
    maximal_function,
    rho_tilde,
    split_tree,
)
from exclusion_bounds.errors import DomainError, InapplicableBoundError
from exclusion_bounds.exclusion import (
    DEFAULT_REGISTRY,
    StatisticsKind,
    StatisticsParams,
    xi_H,
    xi_S,
)
from exclusion_bounds.thermo import GasSpec, ll_gas_bound

C_S = DEFAULT_REGISTRY.C_S

profiles = st.lists(st.floats(0.0, 20.0, allow_subnormal=False), min_size=1, max_size=30).map(np.array)


def _brute_center(rho):
    e, v = rho.edges, rho.cells
    pts = np.concatenate([e, rho.centers])
    out = np.zeros(rho.n)
    for i, c in enumerate(rho.centers):
        for a in pts[pts <= c]:
            for b in pts[pts >= c]:
                if b > a:
                    x = np.linspace(a, b, 2)
                    m = np.interp(b, e, np.concatenate(([0], np.cumsum(v) * rho.width))) - \
                        np.interp(a, e, np.concatenate(([0], np.cumsum(v) * rho.width)))
                    out[i] = max(out[i], m / (b - a))
    return out


# -- profiles ------------------------------------------------------------------

def test_profile_construction():
    r = DensityProfile.from_centers([0.5, 1.5, 2.5], [1.0, 2.0, 3.0])
    assert (r.x0, r.x1, r.width, r.mass) == (0.0, 3.0, 1.0, 6.0)
    assert np.allclose(r.centers, [0.5, 1.5, 2.5])
    with pytest.raises(DomainError):
        DensityProfile(0.0, 1.0, [-1.0])
    with pytest.raises(DomainError):
        DensityProfile.from_centers([0.0, 1.0, 3.0], [1.0, 1.0, 1.0])
    with pytest.raises(DomainError):
        DensityProfile.from_centers([0.0], [1.0])


def test_step_density():
    s = StepDensity([0.0, 1.0, 3.0], [2.0, 1.0])
    assert s.mass == 4.0
    assert s.integral_cube() == 10.0
    assert np.array_equal(s([-1.0, 0.5, 2.0, 3.0]), [0.0, 2.0, 1.0, 0.0])
    with pytest.raises(DomainError):
        StepDensity([0.0, 0.0], [1.0])


# -- maximal function ------------------------------------------------------------

def test_maximal_single_cell():
    rho = DensityProfile(0.0, 5.0, [0.0, 0.0, 10.0, 0.0, 0.0])
    m = maximal_function(rho).cells
    assert m[2] == 10.0
    assert m[3] == pytest.approx(10.0 / 1.5, rel=1e-14)
    assert m[4] == pytest.approx(10.0 / 2.5, rel=1e-14)
    assert m[0] == m[4] and m[1] == m[3]
    low = maximal_function(rho, "cell_lower").cells
    assert low[3] == pytest.approx(5.0) and low[4] == pytest.approx(10.0 / 3)
    with pytest.raises(DomainError):
        maximal_function(rho, "sup")


def test_maximal_constant():
    rho = DensityProfile.uniform(2.5, -1.0, 3.0, 17)
    for mode in ("center", "cell_lower", "cell_sup"):
        assert np.allclose(maximal_function(rho, mode).cells, 2.5, rtol=1e-14)


@given(profiles)
def test_maximal_dominates_and_orders(v):
    rho = DensityProfile(0.0, 1.0, v)
    c = maximal_function(rho, "center").cells
    lo = maximal_function(rho, "cell_lower").cells
    hi = maximal_function(rho, "cell_sup").cells
    assert np.all(c >= v) and np.all(lo >= v)
    assert np.all(lo <= c * (1 + 1e-12))
    assert np.all(c <= hi * (1 + 1e-12))


def _brute_at(rho, x):
    """Exact rho*(x): endpoints at cell edges or at x itself."""
    e = rho.edges
    pre = np.concatenate(([0.0], np.cumsum(rho.cells) * rho.width))
    pts = np.concatenate([e, [x]])
    best = 0.0
    for a in pts[pts <= x]:
        for b in pts[pts >= x]:
            if b > a:
                m = np.interp(b, e, pre) - np.interp(a, e, pre)
                best = max(best, m / (b - a))
    return best


@given(st.lists(st.floats(0.0, 20.0, allow_subnormal=False), min_size=1, max_size=8).map(np.array))
def test_maximal_cell_sup_is_max_over_cell(v):
    rho = DensityProfile(0.0, 2.0, v)
    sup = maximal_function(rho, "cell_sup").cells
    e = rho.edges
    for i in range(rho.n):
        at_edges = max(_brute_at(rho, e[i]), _brute_at(rho, e[i + 1]))
        assert sup[i] == pytest.approx(at_edges, rel=1e-12, abs=1e-12)
        for x in np.linspace(e[i], e[i + 1], 7):
            assert _brute_at(rho, x) <= sup[i] * (1 + 1e-12) + 1e-12


@given(st.lists(st.floats(0.0, 20.0, allow_subnormal=False), min_size=1, max_size=8).map(np.array))
def test_maximal_center_brute_force(v):
    rho = DensityProfile(0.0, 2.0, v)
    assert np.allclose(maximal_function(rho).cells, _brute_center(rho), rtol=1e-12, atol=1e-12)


# -- split tree ------------------------------------------------------------------

def test_split_tree_examples():
    t = split_tree(DensityProfile.uniform(1.0, 0.0, 3.0))
    assert len(t.nodes) == 1 and t.root.label == "B" and t.root.mass == 3
    t = split_tree(DensityProfile.uniform(2.0, 0.0, 4.0))
    assert [nd.mass for nd in t.leaves] == [2, 2, 2, 2]
    assert all(nd.depth == 2 and nd.label == "B" for nd in t.leaves)
    t = split_tree(DensityProfile(0.0, 2.0, [3.0, 0.0]))
    assert len(t.nodes) == 1 and t.root.label == "B"
    t = split_tree(DensityProfile(0.0, 2.0, [5.0, 0.0]))
    leaves = sorted(t.leaves, key=lambda nd: nd.lo)
    assert [(nd.lo, nd.hi, nd.mass, nd.label) for nd in leaves] == [
        (0, Fraction(1, 2), Fraction(5, 2), "B"),
        (Fraction(1, 2), 1, Fraction(5, 2), "B"),
        (1, 2, 0, "A"),
    ]
    rt = rho_tilde(t)
    assert np.array_equal(rt.edges, [0.0, 0.5, 1.0, 2.0])
    assert np.array_equal(rt.values, [5.0, 5.0, 0.0])


def test_split_tree_light_mass():
    with pytest.raises(InapplicableBoundError):
        split_tree(DensityProfile.uniform(1.0, 0.0, 1.5))
    with pytest.raises(InapplicableBoundError):
        split_tree(DensityProfile.uniform(1.0, 0.0, 10.0), q0=(0.0, 1.0))


def test_rho_tilde_uniform():
    rho = DensityProfile.uniform(2.0, 0.0, 4.0)
    rt = rho_tilde(split_tree(rho))
    assert np.all(rt.values == 2.0)
    assert rt.integral_cube() == rho.integral_cube()


@given(profiles, st.floats(2.0, 64.0))
def test_split_tree_invariants(v, target):
    assume(v.sum() > 1e-6)
    rho = DensityProfile(-1.0, 3.0, v * (target / (v.sum() * 4.0 / v.size)))
    assume(rho.mass >= 2.0)
    try:
        tree = split_tree(rho)
    except InapplicableBoundError:
        return
    leaves = sorted(tree.leaves, key=lambda nd: nd.lo)
    assert leaves[0].lo == tree.q0[0] and leaves[-1].hi == tree.q0[1]
    assert all(a.hi == b.lo for a, b in zip(leaves, leaves[1:]))
    assert sum(nd.mass for nd in leaves) == tree.root.mass
    assert all(2 <= nd.mass < 4 for nd in tree.leaves_labelled("B"))
    assert all(nd.mass < 2 for nd in tree.leaves_labelled("A"))
    rt = rho_tilde(tree, rho)
    q = tree.q0[1] - tree.q0[0]
    assert rt.exact_cube_integral >= tree.root.mass ** 3 / q ** 2


# -- Lieb-Liniger density bound -------------------------------------------------------

def test_ll_uniform_matches_gas():
    rho = DensityProfile.uniform(2.0, 0.0, 4.0, 16)
    for eta in (0.3, 1.0, 10.0):
        got = ll_density_bound(rho, eta).value
        stats = StatisticsParams(StatisticsKind.LIEB_LINIGER, eta=eta)
        gas = ll_gas_bound(GasSpec.from_box(stats, 8, 4.0, 1.0)).value * 4.0
        assert got == pytest.approx(gas, rel=1e-9)
        assert got == pytest.approx(C_S * xi_S(2 * eta / 2.0) ** 2 * 8.0 * 4.0, rel=1e-12)


@given(profiles)
def test_ll_limits(v):
    rho = DensityProfile(0.0, 1.0, v)
    assert ll_density_bound(rho, 0.0).value == 0.0
    inf = ll_density_bound(rho, math.inf).value
    assert inf == pytest.approx(C_S * (math.pi / 2) ** 2 * rho.integral_cube(), rel=1e-12, abs=1e-300)


@given(profiles, st.floats(0.0, 50.0), st.floats(0.0, 50.0))
def test_ll_monotone_in_eta(v, a, b):
    rho = DensityProfile(0.0, 1.0, v)
    lo, hi = sorted((a, b))
    assert ll_density_bound(rho, lo).value <= ll_density_bound(rho, hi).value * (1 + 1e-12)


@given(profiles, st.sampled_from([0.5, 2.0, 3.0]), st.floats(0.1, 10.0))
def test_ll_scaling(v, s, eta):
    rho = DensityProfile(0.0, 1.0, v)
    scaled = DensityProfile(0.0, 1.0 / s, v * s)
    assert ll_density_bound(scaled, s * eta).value == pytest.approx(
        s * s * ll_density_bound(rho, eta).value, rel=1e-9, abs=1e-300)


def test_ll_mode_ordering():
    # the integrand decreases in rho*, so a larger rho* gives a smaller bound
    rng = np.random.default_rng(5)
    rho = DensityProfile(0.0, 1.0, rng.exponential(size=200))
    sup = ll_density_bound(rho, 1.0).value
    mid = ll_density_bound(rho, 1.0, maximal_mode="center").value
    low = ll_density_bound(rho, 1.0, maximal_mode="cell_lower").value
    assert sup <= mid <= low
    assert ll_density_bound(rho, 1.0).diagnostics["maximal_mode"] == "cell_sup"


# -- Calogero-Sutherland density bound -------------------------------------------------

@pytest.mark.parametrize("L", [1.0, 4.0, 0.25])
def test_cs_uniform_mass_8(L):
    rho = DensityProfile.uniform(8.0 / L, 0.0, L, 8)
    for alpha in (1.0, 2.0, 7.5):
        want = xi_H(alpha) ** 2 * (8.0 / L) ** 3 * L / 32
        assert cs_density_bound(rho, alpha).value == pytest.approx(want, rel=1e-9)


def test_cs_fermion_comparison():
    rho = DensityProfile.uniform(3.0, 0.0, 64.0)
    v = cs_density_bound(rho, 1.0).value
    assert v <= math.pi ** 2 / 6 * 27 * 64
    assert v == pytest.approx((math.pi / 2) ** 2 / 32 * 27 * 64, rel=1e-12)


def test_cs_inapplicable():
    rho = DensityProfile.uniform(1.0, 0.0, 1.0)
    with pytest.raises(InapplicableBoundError):
        cs_density_bound(rho, 2.0)
    with pytest.raises(InapplicableBoundError):
        cs_density_bound(DensityProfile.uniform(4.0, 0.0, 1.0), 0.5)


@given(profiles, st.floats(1.0, 30.0), st.floats(1.0, 30.0))
def test_cs_monotone_in_alpha(v, a, b):
    assume(v.sum() * 8.0 / v.size >= 2.0)
    rho = DensityProfile(0.0, 8.0, v)
    lo, hi = sorted((a, b))
    assert cs_density_bound(rho, lo).value <= cs_density_bound(rho, hi).value * (1 + 1e-12)


@given(profiles, st.sampled_from([0.5, 2.0, 4.0]))
def test_cs_scaling(v, s):
    assume(v.sum() * 8.0 / v.size >= 2.0)
    rho = DensityProfile(0.0, 8.0, v)
    scaled = DensityProfile(0.0, 8.0 / s, v * s)
    assert cs_density_bound(scaled, 2.0).value == pytest.approx(
        s * s * cs_density_bound(rho, 2.0).value, rel=1e-9)


def test_cs_weak_diagnostic():
    rho = DensityProfile(0.0, 4.0, [0.0, 5.0, 1.0, 0.0])
    r = cs_density_bound(rho, 2.0)
    assert r.value >= r.diagnostics["weak_value"]
    assert r.diagnostics["mass_Q0"] == 6.0
