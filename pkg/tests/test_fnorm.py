import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mulholland.envelope import envelope_norm
from mulholland.fnorm import (
    DirectSumPoint,
    NormedComponent,
    dist,
    fnorm,
    local_boundedness_probe,
    nu_estimate,
    radial_root,
    sample_point,
    unit_sphere_contour,
    verify_mulholland_inequality,
)
from mulholland.youngfn import Power, build_example_omega, build_interpolation_young

OMEGA = build_example_omega()
CUBIC = Power(0.25, 3.0)
norm_lists = st.lists(st.floats(0.0, 100.0), min_size=2, max_size=8)


def test_fnorm_examples():
    assert fnorm(OMEGA, [1.0, 1.0]) == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert fnorm(CUBIC, [1.0, 1.0]) == pytest.approx(2 ** (1 / 3), rel=1e-15)
    assert fnorm(OMEGA, []) == 0.0
    with pytest.raises(ValueError):
        fnorm(OMEGA, [1.0, -1.0])


@given(st.floats(0.0, 1e8), st.integers(0, 5))
def test_axis_elements_are_exact(a, zeros):
    assert fnorm(OMEGA, [0.0] * zeros + [a] + [0.0] * (5 - zeros)) == a


def test_fnorm_oracle_forward_evaluation():
    for norms in ([1.0, 2.0], [0.3, 7.0, 20.0], [100.0] * 8):
        v = fnorm(OMEGA, norms)
        assert OMEGA(v) == pytest.approx(math.fsum(OMEGA(a) for a in norms), rel=1e-13)


@settings(max_examples=200)
@given(norm_lists, st.data())
def test_mulholland_inequality(a, data):
    b = data.draw(st.lists(st.floats(0.0, 100.0), min_size=len(a), max_size=len(a)))
    for phi in (OMEGA, CUBIC, build_interpolation_young(1.5)):
        assert verify_mulholland_inequality(phi, a, b).holds


def test_mulholland_inequality_examples():
    rep = verify_mulholland_inequality(OMEGA, [1, 1], [1, 1])
    assert rep.lhs == pytest.approx(fnorm(OMEGA, [2.0, 2.0]))
    assert rep.rhs == pytest.approx(2 * math.sqrt(2.0)) and rep.holds
    rep = verify_mulholland_inequality(OMEGA, [3.0, 4.0], [0.0, 0.0])
    assert rep.lhs == rep.rhs and rep.holds


@settings(max_examples=200)
@given(norm_lists, st.integers(0, 7), st.floats(1e-3, 10.0))
def test_fnorm_monotone_in_each_component(norms, j, bump):
    j %= len(norms)
    bigger = list(norms)
    bigger[j] += bump
    assert fnorm(OMEGA, bigger) > fnorm(OMEGA, norms)


def test_scaling_is_continuous_and_increasing():
    rng = np.random.default_rng(3)
    for _ in range(20):
        norms = list(np.exp(rng.uniform(-3, 3, 3)))
        vals = [fnorm(OMEGA, [k * v for v in norms]) for k in np.geomspace(1e-3, 1e3, 400)]
        assert np.all(np.diff(vals) > 0)
        # no jumps: neighbouring ratios close to the grid step
        assert np.max(np.diff(np.log(vals))) < 0.1


SPACE = (NormedComponent(2), NormedComponent(3, q=1.0), NormedComponent(1))


@pytest.mark.parametrize("phi", [OMEGA, CUBIC, Power(1.0, 1.5)], ids=repr)
def test_metric_axioms(phi):
    rng = np.random.default_rng(11)
    for _ in range(500):
        x, y, z = (sample_point(rng, SPACE) for _ in range(3))
        dxy, dyz, dxz = dist(phi, x, y), dist(phi, y, z), dist(phi, x, z)
        assert dxy >= 0.0
        assert dxy == dist(phi, y, x)
        assert dxz <= dxy + dyz + 1e-9 * (1 + dxy + dyz)
        assert dist(phi, x, x) == 0.0


def test_identity_of_indiscernibles():
    rng = np.random.default_rng(5)
    x = sample_point(rng, SPACE)
    y = DirectSumPoint(tuple(c.copy() for c in x.components), SPACE)
    assert dist(OMEGA, x, y) == 0.0
    comps = list(y.components)
    comps[1] = comps[1] + np.array([0.0, 1e-6, 0.0])
    assert dist(OMEGA, x, DirectSumPoint(tuple(comps), SPACE)) > 1e-12


def test_translation_invariance_on_dyadic_points():
    rng = np.random.default_rng(8)
    space = (NormedComponent(2), NormedComponent(2))
    for _ in range(200):
        x, y, z = (DirectSumPoint(tuple(rng.integers(-2**20, 2**20, 2) / 256.0 for _ in space),
                                  space) for _ in range(3))
        assert dist(OMEGA, x + z, y + z) == dist(OMEGA, x, y)


def test_norm_and_vector_forms_agree():
    rng = np.random.default_rng(2)
    for _ in range(100):
        x = sample_point(rng, SPACE)
        assert fnorm(OMEGA, x.norms()) == dist(OMEGA, x, DirectSumPoint.zeros_like(x))


def test_dist_rejects_shape_mismatch():
    a = DirectSumPoint(([1.0, 2.0], [3.0]))
    b = DirectSumPoint(([1.0], [3.0]))
    with pytest.raises(ValueError):
        dist(OMEGA, a, b)
    with pytest.raises(TypeError):
        dist(OMEGA, [1.0], [2.0])


def test_nu_estimate_regimes():
    space = (NormedComponent(2), NormedComponent(2))
    rep = nu_estimate(OMEGA, space, 1000, [0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 1e3, 1e6])
    assert rep.per_regime["k>=1"] <= 1 + 1e-6
    # shrinking leaves the cubic regime for the quadratic one, where the ratio exceeds 1
    assert rep.per_regime["k<1"] > 1.0
    single = nu_estimate(OMEGA, (NormedComponent(3),), 100, [0.1, 1.0, 10.0])
    assert single.nu_hat == pytest.approx(1.0, rel=1e-15)


@pytest.mark.parametrize("phi", [OMEGA, CUBIC], ids=repr)
def test_local_boundedness(phi):
    rep = local_boundedness_probe(phi, 0.5, 1000)
    assert rep.inclusion1 and rep.inclusion2
    assert rep.checked1 > 0 and rep.checked2 == 3000


def test_origin_is_in_every_ball():
    assert fnorm(OMEGA, [0.0, 0.0]) == 0.0


def test_contour_of_power_is_p_ball():
    p = 3.0
    theta, pts = unit_sphere_contour(Power(1.0, p), 64)
    rho = np.hypot(pts[:, 0], pts[:, 1])
    exact = 1.0 / (np.abs(np.cos(theta)) ** p + np.abs(np.sin(theta)) ** p) ** (1 / p)
    assert np.max(np.abs(rho - exact)) <= 1e-8


def test_contour_shape_and_orientation():
    theta, pts = unit_sphere_contour(OMEGA, 16)
    assert theta.shape == (64,) and pts.shape == (64, 2)
    assert np.all(np.diff(theta) > 0) and theta[0] == 0.0 and theta[-1] < 2 * math.pi
    assert tuple(pts[16]) == (0.0, 1.0) and tuple(pts[32]) == (-1.0, 0.0)
    with pytest.raises(ValueError):
        unit_sphere_contour(OMEGA, 4)


@pytest.mark.parametrize("level", [1.0, 10.0, 1e3])
def test_omega_contour_inside_envelope_ball(level):
    # the cubic envelope ball scaled to meet the contour on the axes
    theta, pts = unit_sphere_contour(OMEGA, 32, level=level)
    rho = np.hypot(pts[:, 0], pts[:, 1])
    env = level / np.array([envelope_norm(3.0, [abs(math.cos(t)), abs(math.sin(t))])
                            for t in theta])
    assert np.all(rho <= env * (1 + 1e-12))


def test_radial_root_hits_level():
    for d in ((1.0, 0.0), (1.0, 1.0), (0.2, 3.0)):
        rho = radial_root(OMEGA, d, 5.0)
        assert fnorm(OMEGA, [rho * v for v in d]) == pytest.approx(5.0, rel=1e-14)
