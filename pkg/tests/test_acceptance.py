"""End-to-end acceptance criteria, each at its stated size and tolerance."""

import math
import time

import numpy as np

from mulholland.dirlimit import (default_ladder, direct_limit_norm,
                                 limit_local_boundedness_probe)
from mulholland.envelope import envelope_ratio, maximal_subspace_ratio
from mulholland.fnorm import (DirectSumPoint, NormedComponent, dist, fnorm,
                              local_boundedness_probe, verify_mulholland_inequality)
from mulholland.orlicz import (DiscreteMeasure, L1Polygon, SampledFunction,
                               brute_force_orlicz_norm, eta_concat, luxemburg_norm, ngamma_norm,
                               orlicz_norm)
from mulholland.youngfn import (AnalyticCharacteristic, ConjugateYoung, Power,
                                build_example_omega, build_interpolation_young, check_delta2,
                                conjugate_closed_form_omega, conjugate_numeric)

OMEGA = build_example_omega()


def test_c01_mulholland_inequality_suite(acceptance):
    rng = np.random.default_rng(101)
    phis = {"omega": OMEGA, **{f"interp({p})": build_interpolation_young(p)
                               for p in (1.5, 2.0, 3.0)}}
    start = time.perf_counter()
    failures, total = 0, 0
    for phi in phis.values():
        for _ in range(10**4):
            n = int(rng.integers(2, 9))
            a, b = rng.uniform(0.0, 100.0, (2, n))
            rep = verify_mulholland_inequality(phi, list(a), list(b))
            total += 1
            # independent restatement of the tolerance
            failures += not (rep.lhs <= rep.rhs + 1e-9 * (1.0 + rep.rhs))
    elapsed = time.perf_counter() - start
    ok = acceptance(1, failures == 0 and elapsed < 30.0,
                    f"Mulholland inequality {total - failures}/{total} pairs, {elapsed:.1f} s")
    assert ok


def test_c02_conjugate_agreement(acceptance):
    ts = np.geomspace(1.0, 1e6, 100)
    xs = np.concatenate([[0.0], np.geomspace(1e-6, 2e4, 10**6)])
    om = OMEGA(xs)
    worst_routes = worst_grid = 0.0
    for t in ts:
        num, closed = conjugate_numeric(OMEGA, t), conjugate_closed_form_omega(t)
        grid = float(np.max(xs * t - om))
        worst_routes = max(worst_routes, abs(num - closed) / closed)
        worst_grid = max(worst_grid, abs(num - grid) / grid, abs(closed - grid) / grid)
    ok = acceptance(2, worst_routes <= 1e-6 and worst_grid <= 1e-4,
                    f"conjugate routes rel err {worst_routes:.2e} (tol 1e-6), "
                    f"vs grid {worst_grid:.2e} (tol 1e-4)")
    assert ok


def test_c03_delta2_constants(acceptance):
    rep = check_delta2(OMEGA, 1.0, 1e9, 10**4)
    omega_ok = rep.satisfied and rep.constant <= 8.0
    theta = check_delta2(ConjugateYoung(OMEGA, "closed"), 1.0, 1e9, 2000)
    beyond = theta.ratios[theta.grid >= theta.knee]
    bound = 2.0 ** 1.5 + 0.01
    theta_ok = bool(beyond.size) and float(beyond.max()) <= bound
    sinh = check_delta2(AnalyticCharacteristic("sinh"), 1.0, 1e9, 2000)
    sinh_ok = (not sinh.satisfied) and math.isfinite(sinh.witness)
    ok = acceptance(3, omega_ok and theta_ok and sinh_ok,
                    f"Omega sup {rep.constant:.9f} <= 8: {omega_ok}; "
                    f"Theta sup beyond knee t={theta.knee:.4g} is {float(beyond.max()):.6f} "
                    f"<= {bound:.6f}: {theta_ok}; sinh flagged at t={sinh.witness:.4g}: {sinh_ok}")
    assert ok


def test_c04_envelope_convergence(acceptance):
    rng = np.random.default_rng(104)
    ks = (10.0, 1e2, 1e4, 1e6)
    worst, monotone = 0.0, True
    for _ in range(100):
        th = rng.uniform(0.0, math.pi / 2)
        d = [math.cos(th), math.sin(th)]
        dev = [abs(envelope_ratio(OMEGA, k, d) - 1.0) for k in ks]
        worst = max(worst, dev[-1])
        monotone &= all(b <= a for a, b in zip(dev, dev[1:]))
    ok = acceptance(4, worst <= 1e-4 and monotone,
                    f"max |ratio(1e6) - 1| = {worst:.2e} (tol 1e-4), monotone: {monotone}")
    assert ok


def test_c05_maximal_subspace_witness(acceptance):
    r = maximal_subspace_ratio(OMEGA, 1e4, 1.0, 1.0)
    ok = acceptance(5, abs(r - math.sqrt(2.0)) <= 1e-3 and abs(r - 1.0) >= 0.4,
                    f"ratio {r:.9f}, |ratio - sqrt2| = {abs(r - math.sqrt(2)):.2e}, "
                    f"|ratio - 1| = {abs(r - 1):.4f}")
    assert ok


def test_c06_eta_isometry(acceptance):
    rng = np.random.default_rng(106)
    phis = [Power(1.0, 2.0), OMEGA, Power(0.25, 3.0)]
    worst, bad = 0.0, 0
    for _ in range(10**3):
        phi = phis[int(rng.integers(3))]
        n = int(rng.integers(1, 65))
        mu = DiscreteMeasure(tuple(np.exp(rng.uniform(-2, 2, n))))
        f = SampledFunction(tuple(rng.standard_normal(n) * np.exp(rng.uniform(-2, 2, n))))
        g = SampledFunction(tuple(rng.standard_normal(n) * np.exp(rng.uniform(-2, 2, n))))
        lhs = ngamma_norm(L1Polygon(), phi, f, g, mu)
        fg, mu2 = eta_concat(f, g, mu)
        rhs = luxemburg_norm(phi, fg, mu2)
        worst = max(worst, abs(lhs - rhs) / (1.0 + rhs))
        bad += abs(lhs - rhs) > 1e-9 * (1.0 + rhs)
    ok = acceptance(6, bad == 0, f"eta isometry 1000 instances, worst residual {worst:.2e}")
    assert ok


def test_c07_orlicz_cross_check(acceptance):
    rng = np.random.default_rng(107)
    worst = 0.0
    for _ in range(100):
        mu = DiscreteMeasure(tuple(np.exp(rng.uniform(-2, 2, 2))))
        f = SampledFunction(tuple(rng.uniform(0.1, 10.0, 2)))
        a, b = orlicz_norm(OMEGA, f, mu), brute_force_orlicz_norm(OMEGA, f, mu)
        worst = max(worst, abs(a - b) / b)
    phis = [Power(1.0, 2.0), OMEGA, Power(0.25, 3.0)]
    sandwich_bad = 0
    for _ in range(10**3):
        phi = phis[int(rng.integers(3))]
        n = int(rng.integers(1, 9))
        mu = DiscreteMeasure(tuple(np.exp(rng.uniform(-2, 2, n))))
        f = SampledFunction(tuple(rng.standard_normal(n) * np.exp(rng.uniform(-2, 2, n))))
        lux, orl = luxemburg_norm(phi, f, mu), orlicz_norm(phi, f, mu)
        # t^2 attains the upper end exactly; allow round-off only
        sandwich_bad += not (lux <= orl * (1 + 1e-12) and orl <= 2 * lux * (1 + 1e-12))
    ok = acceptance(7, worst <= 1e-4 and sandwich_bad == 0,
                    f"Amemiya vs brute force worst rel gap {worst:.2e} (tol 1e-4); "
                    f"sandwich violations {sandwich_bad}/1000")
    assert ok


def test_c08_metric_axioms(acceptance):
    rng = np.random.default_rng(108)
    space = (NormedComponent(2), NormedComponent(3, q=1.0), NormedComponent(1))

    def point():
        # dyadic coordinates: x + z and y + z are exact, so translation can be exact
        return DirectSumPoint(tuple(rng.integers(-2**24, 2**24, sp.dimension)
                                    * 2.0 ** int(rng.integers(-30, 0)) for sp in space), space)

    worst, tri_bad, sym_bad, trans_bad = -math.inf, 0, 0, 0
    for _ in range(10**4):
        x, y, z = point(), point(), point()
        dxy, dyz, dxz = dist(OMEGA, x, y), dist(OMEGA, y, z), dist(OMEGA, x, z)
        scale = 1.0 + dxy + dyz
        worst = max(worst, (dxz - dxy - dyz) / scale)
        tri_bad += dxz > dxy + dyz + 1e-9 * scale
        sym_bad += dxy != dist(OMEGA, y, x)
        trans_bad += dist(OMEGA, x + z, y + z) != dxy
    ok = acceptance(8, tri_bad == 0 and sym_bad == 0 and trans_bad == 0,
                    f"10^4 triples: triangle violations {tri_bad} (max rel slack {worst:.2e}), "
                    f"symmetry mismatches {sym_bad}, translation mismatches {trans_bad}")
    assert ok


def test_c09_direct_limit_consistency(acceptance):
    rng = np.random.default_rng(109)
    ladder = default_ladder()
    pad_bad, worst = 0, 0.0
    for _ in range(10**3):
        n = int(rng.integers(1, 17))
        a = list(rng.standard_normal(n) * np.exp(rng.uniform(-3, 3, n)))
        padded = a + [0.0] * int(rng.integers(1, 10))
        pad_bad += direct_limit_norm(ladder, padded) != direct_limit_norm(ladder, a)
        x, y = rng.standard_normal(2) * np.exp(rng.uniform(-3, 3, 2))
        ref = fnorm(ladder[1], [abs(x), abs(y)])
        worst = max(worst, abs(direct_limit_norm(ladder, [x, y]) - ref) / max(ref, 1e-300))
    ok = acceptance(9, pad_bad == 0 and worst <= 1e-12,
                    f"zero padding mismatches {pad_bad}/1000; two-entry vs fnorm {worst:.2e}")
    assert ok


def test_c10_local_boundedness(acceptance):
    f_rep = local_boundedness_probe(OMEGA, 0.5, 10**3, seed=110)
    d_rep = limit_local_boundedness_probe(default_ladder(), 10**3, seed=110)
    ok = acceptance(10, f_rep.inclusion1 and f_rep.inclusion2 and d_rep.all_finite,
                    f"fnorm inclusions {f_rep.inclusion1}/{f_rep.inclusion2} "
                    f"({f_rep.checked1}+{f_rep.checked2} pts); direct-limit scalings "
                    + ", ".join(f"r={r:g}: s<={s:.4f}" for r, s in d_rep.bounds.items()))
    assert ok
