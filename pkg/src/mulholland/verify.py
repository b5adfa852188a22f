"""Seeded property suites behind ``mulholland verify``.

Each suite returns a list of :class:`CheckRecord`. Trial ``i`` of check
``name`` draws from its own stream ``default_rng([seed, crc32(name), i])``,
so a failure is reproduced from its witness alone and the report does not
depend on execution order.
"""

import math
import time
import warnings
import zlib
from dataclasses import asdict, dataclass, field

import numpy as np

from .dirlimit import (constant_ladder, default_ladder, direct_limit_norm,
                       limit_local_boundedness_probe)
from .envelope import (dual_norm_bruteforce, envelope_hull_check, envelope_norm,
                       envelope_ratio, maximal_subspace_ratio)
from .fnorm import (DirectSumPoint, NormedComponent, dist, fnorm, local_boundedness_probe,
                    nu_estimate, sample_point, verify_mulholland_inequality)
from .orlicz import (DiscreteMeasure, L1Polygon, SampledFunction, brute_force_orlicz_norm,
                     eta_concat, luxemburg_norm, modular, ngamma_norm, orlicz_norm)
from .youngfn import (AnalyticCharacteristic, ConjugateYoung, Power, asymptote_of,
                      build_example_omega, build_interpolation_young, check_delta2,
                      check_mulholland, conjugate_closed_form_omega, conjugate_numeric,
                      inverse_young)

__all__ = ["CheckRecord", "RunReport", "SUITES", "run_suites"]

# brute-force Orlicz sups cost ~0.15 s each; larger trial counts are capped
BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    observed: float
    tolerance: float
    trials: int
    witness: object = None
    note: str = ""

    def as_dict(self):
        d = asdict(self)
        d["status"] = "pass" if self.passed else "fail"
        del d["passed"]
        return d


@dataclass
class RunReport:
    command: str
    seed: int
    checks: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def body(self):
        """Everything except the wall time; byte-stable for a fixed seed."""
        return {"command": self.command, "seed": self.seed,
                "status": "pass" if self.passed else "fail",
                "warnings": list(self.warnings),
                "checks": [c.as_dict() for c in self.checks]}

    def as_dict(self):
        return {**self.body(), "wall_time": self.wall_time}


def _rng(seed, name, i):
    return np.random.default_rng([seed, zlib.crc32(name.encode()), i])


def _worst(name, trials, seed, tol, trial_fn, note=""):
    """Run ``trial_fn(rng) -> (excess, inputs)``; pass iff every excess <= tol.

    ``observed`` is the largest excess; a failing record carries the worst trial.
    """
    worst, witness = (0.0 if trials == 0 else -math.inf), None
    for i in range(trials):
        excess, inputs = trial_fn(_rng(seed, name, i))
        if excess > worst:
            worst, witness = excess, {"seed": seed, "trial": i, "inputs": inputs}
    passed = worst <= tol
    return CheckRecord(name, bool(passed), float(worst), float(tol), trials,
                       None if passed else witness, note)


def _single(name, passed, observed, tol, witness=None, note=""):
    return CheckRecord(name, bool(passed), float(observed), float(tol), 1,
                       None if passed else witness, note)


def _youngs():
    return {"omega": build_example_omega(),
            "interp_1.5": build_interpolation_young(1.5),
            "interp_2": build_interpolation_young(2.0),
            "interp_3": build_interpolation_young(3.0),
            "cubic": Power(0.25, 3.0)}


def suite_youngfn(seed, trials):
    out = []
    omega = build_example_omega()
    for label, phi in _youngs().items():
        def roundtrip(rng, phi=phi):
            t = math.exp(rng.uniform(math.log(1e-6), math.log(1e6)))
            return abs(inverse_young(phi, phi(t)) - t) / (1.0 + t), [t]
        out.append(_worst(f"youngfn.inverse_roundtrip[{label}]", trials, seed, 1e-9, roundtrip))

    def young_ineq(rng):
        x, t = (math.exp(v) for v in rng.uniform(math.log(1e-3), math.log(1e3), 2))
        return (x * t - omega(x) - conjugate_numeric(omega, t)) / (1.0 + x * t), [x, t]
    out.append(_worst("youngfn.young_inequality[omega]", trials, seed, 1e-9, young_ineq))

    n = min(trials, 100)
    ts = np.geomspace(1.0, 1e6, n) if n else []
    errs = [abs(conjugate_numeric(omega, t) - conjugate_closed_form_omega(t))
            / conjugate_closed_form_omega(t) for t in ts]
    worst = max(errs, default=0.0)
    out.append(CheckRecord("youngfn.conjugate_agreement[omega]", worst <= 1e-6, worst, 1e-6, n,
                           None if worst <= 1e-6 else {"t": float(ts[int(np.argmax(errs))])}))

    def sandwich(rng):
        x = math.exp(rng.uniform(0.0, math.log(1e6)))
        v = omega(x)
        lo = max(x * x, 0.25 * x ** 3)
        return max(lo - v, v - x ** 3) / v, [x]
    out.append(_worst("youngfn.power_sandwich[omega]", trials, seed, 1e-14, sandwich))

    rep = check_delta2(omega, 1.0, 1e9, 2000)
    out.append(_single("youngfn.delta2_constant[omega]", rep.satisfied and rep.constant <= 8.0,
                       rep.constant, 8.0, {"t": rep.witness}))
    theta = ConjugateYoung(omega, "closed")
    rep = check_delta2(theta, 1.0, 1e9, 400)
    beyond = rep.ratios[rep.grid >= rep.knee]
    bound = 2.0 ** 1.5 + 0.01
    top = float(beyond.max()) if beyond.size else math.inf
    out.append(_single("youngfn.delta2_conjugate_tail[omega]", rep.satisfied and top <= bound,
                       top, bound, {"knee": rep.knee}, note=f"knee t={rep.knee:.6g}"))
    rep = check_delta2(AnalyticCharacteristic("sinh"), 1.0, 1e9, 400)
    flagged = (not rep.satisfied) and math.isfinite(rep.witness)
    out.append(_single("youngfn.delta2_flags_sinh", flagged, rep.witness, math.inf,
                       rep.as_dict(), note="observed = witness t"))
    rep = check_mulholland(omega, -20.0, 20.0, 4001)
    out.append(_single("youngfn.mulholland[omega]", rep.satisfied, rep.min_second_difference,
                       0.0, rep.as_dict(), note="observed = min second difference"))
    rep = check_mulholland(AnalyticCharacteristic("log1p"), -5.0, 5.0, 1001)
    out.append(_single("youngfn.mulholland_flags_log1p", not rep.satisfied,
                       rep.min_second_difference, 0.0, rep.as_dict()))
    b = asymptote_of(omega.chi).intercept
    err = abs(b + 2.0 * math.log(2.0))
    out.append(_single("youngfn.asymptote_intercept[omega]", err <= 1e-12, err, 1e-12))
    return out


def _triple(rng, dim=2):
    space = (NormedComponent(dim), NormedComponent(dim, q=1.0), NormedComponent(1))
    return [sample_point(rng, space, 1e-3, 1e3) for _ in range(3)]


def suite_fnorm(seed, trials):
    out = []
    for label, phi in _youngs().items():
        def mulholland(rng, phi=phi):
            n = int(rng.integers(2, 9))
            a, b = rng.uniform(0.0, 100.0, (2, n))
            rep = verify_mulholland_inequality(phi, list(a), list(b))
            return (rep.lhs - rep.rhs) / (1.0 + rep.rhs), [list(a), list(b)]
        out.append(_worst(f"fnorm.mulholland_inequality[{label}]", trials, seed, 1e-9, mulholland))

    for label in ("omega", "cubic"):
        phi = _youngs()[label]

        def triangle(rng, phi=phi):
            x, y, z = _triple(rng)
            dxz, dxy, dyz = dist(phi, x, z), dist(phi, x, y), dist(phi, y, z)
            scale = 1.0 + dxy + dyz
            return (dxz - dxy - dyz) / scale, [c.tolist() for p in (x, y, z) for c in p.components]
        out.append(_worst(f"fnorm.triangle[{label}]", trials, seed, 1e-9, triangle))

        def exact(rng, phi=phi):
            # dyadic coordinates keep x + z and y + z exact, so translation is exact too
            space = (NormedComponent(2), NormedComponent(1))
            x, y, z = (DirectSumPoint(tuple(rng.integers(-2**20, 2**20, sp.dimension) / 1024.0
                                            for sp in space), space) for _ in range(3))
            sym = dist(phi, x, y) != dist(phi, y, x)
            trans = dist(phi, x + z, y + z) != dist(phi, x, y)
            form = fnorm(phi, x.norms()) != dist(phi, x, DirectSumPoint.zeros_like(x))
            return float(sym or trans or form), [c.tolist() for p in (x, y, z) for c in p.components]
        out.append(_worst(f"fnorm.symmetry_translation_vector_form[{label}]", trials, seed, 0.0,
                          exact))

    omega = build_example_omega()

    def monotone(rng):
        norms = list(np.exp(rng.uniform(-5, 5, int(rng.integers(2, 6)))))
        j = int(rng.integers(len(norms)))
        bigger = list(norms)
        bigger[j] *= 1.0 + rng.uniform(0.01, 1.0)
        return float(not fnorm(omega, bigger) > fnorm(omega, norms)), [norms, j]
    out.append(_worst("fnorm.monotone_in_components[omega]", trials, seed, 0.0, monotone))

    if trials:
        space = (NormedComponent(2), NormedComponent(2))
        rep = nu_estimate(omega, space, trials, [1.0, 2.0, 10.0, 1e3, 1e6], seed=seed)
        v = rep.per_regime["k>=1"]
        out.append(_single("fnorm.homogeneity_k_ge_1[omega]", v <= 1.0 + 1e-9, v, 1.0 + 1e-9,
                           {"seed": seed}))
        rep = local_boundedness_probe(omega, 0.5, trials, seed=seed)
        ok = rep.inclusion1 and rep.inclusion2
        out.append(CheckRecord("fnorm.local_boundedness[omega]", ok, float(ok), 1.0, trials,
                               None if ok else {"seed": seed, "witness": repr(rep.witness)},
                               note=f"inclusion1 {rep.checked1} pts, inclusion2 {rep.checked2} pts"))
    return out


def suite_envelope(seed, trials):
    out = []
    omega = build_example_omega()
    ks = (10.0, 1e2, 1e4, 1e6)

    def ratio(rng):
        th = rng.uniform(0.0, math.pi / 2.0)
        d = [math.cos(th), math.sin(th)]
        devs = [abs(envelope_ratio(omega, k, d) - 1.0) for k in ks]
        mono = all(b <= a for a, b in zip(devs, devs[1:]))
        return (devs[-1] if mono else math.inf), [th]
    out.append(_worst("envelope.ratio_at_1e6[omega]", trials, seed, 1e-4, ratio,
                      note="also requires non-increasing deviation over k=10..1e6"))

    r = maximal_subspace_ratio(omega, 1e4, 1.0, 1.0)
    err = abs(r - math.sqrt(2.0))
    out.append(_single("envelope.maximal_subspace_ratio(1e4)-sqrt2", err <= 1e-3, err, 1e-3,
                       {"ratio": r}, note=f"ratio={r:.12g}, |ratio-1|={abs(r - 1.0):.6g}"))

    rep = envelope_hull_check(omega, 64)
    out.append(_single("envelope.hull_gap_non_increasing[omega]", rep.non_increasing,
                       rep.gaps[-1], rep.gaps[0], rep.as_dict(),
                       note="observed = gap at largest scale"))

    def homog(rng):
        norms = list(np.exp(rng.uniform(-3, 3, 3)))
        p = rng.uniform(1.1, 4.0)
        k = float(2.0 ** int(rng.integers(-5, 6)))
        return abs(envelope_norm(p, [k * v for v in norms]) - k * envelope_norm(p, norms)) \
            / (k * envelope_norm(p, norms)), [norms, p, k]
    out.append(_worst("envelope.homogeneity", trials, seed, 1e-15, homog,
                      note="power-of-two scalings"))

    def duality(rng):
        p = rng.uniform(1.2, 5.0)
        q = p / (p - 1.0)
        x = rng.standard_normal(2)
        exact = envelope_norm(q, np.abs(x))
        return abs(dual_norm_bruteforce(p, x, grid=2001) - exact) / exact, [p, x.tolist()]
    out.append(_worst("envelope.duality", trials, seed, 1e-6, duality))
    return out


def suite_dirlimit(seed, trials):
    out = []
    ladder = default_ladder()

    def seq(rng, n_max=8):
        n = int(rng.integers(1, n_max + 1))
        return list(rng.standard_normal(n) * np.exp(rng.uniform(-2, 2, n)))

    def padding(rng):
        a = seq(rng, 16)
        pad = a + [0.0] * int(rng.integers(1, 8))
        return float(direct_limit_norm(ladder, pad) != direct_limit_norm(ladder, a)), [a]
    out.append(_worst("dirlimit.zero_padding_exact", trials, seed, 0.0, padding))

    def two_entry(rng):
        a = seq(rng, 1) + seq(rng, 1)
        ref = fnorm(ladder[1], [abs(a[0]), abs(a[1])])
        return abs(direct_limit_norm(ladder, a) - ref) / (1.0 + ref), [a]
    out.append(_worst("dirlimit.two_entry_matches_fnorm", trials, seed, 1e-12, two_entry))

    def triangle(rng):
        a, b = seq(rng), seq(rng)
        n = max(len(a), len(b))
        a, b = a + [0.0] * (n - len(a)), b + [0.0] * (n - len(b))
        na, nb = direct_limit_norm(ladder, a), direct_limit_norm(ladder, b)
        nab = direct_limit_norm(ladder, [x + y for x, y in zip(a, b)])
        return (nab - na - nb) / (1.0 + na + nb), [a, b]
    out.append(_worst("dirlimit.triangle", trials, seed, 1e-9, triangle))

    def monotone(rng):
        a = seq(rng)
        j = int(rng.integers(len(a)))
        b = list(a)
        b[j] = math.copysign(abs(b[j]) * (1.0 + rng.uniform(0.01, 1.0)) + 1e-3, b[j])
        return float(not direct_limit_norm(ladder, b) > direct_limit_norm(ladder, a)), [a, j]
    out.append(_worst("dirlimit.monotone", trials, seed, 0.0, monotone))

    if trials:
        rep = limit_local_boundedness_probe(ladder, trials, seed=seed)
        worst = max(rep.bounds.values())
        out.append(CheckRecord("dirlimit.local_boundedness", rep.all_finite, worst, math.inf,
                               trials, None if rep.all_finite else {"seed": seed},
                               note="bounds " + ", ".join(f"r={r:g}: {s:.6g}"
                                                          for r, s in rep.bounds.items())))
    omega = build_example_omega()
    v = direct_limit_norm(constant_ladder(omega), [1.0, 1.0])
    out.append(_single("dirlimit.constant_omega_ladder(1,1)", abs(v - math.sqrt(2)) <= 1e-12,
                       abs(v - math.sqrt(2)), 1e-12))
    return out


def _function(rng, n):
    vals = rng.standard_normal(n) * np.exp(rng.uniform(-2, 2, n))
    vals[rng.uniform(size=n) < 0.2] = 0.0
    return SampledFunction(tuple(vals))


def _measure(rng, n):
    return DiscreteMeasure(tuple(np.exp(rng.uniform(-2, 2, n))))


def suite_orlicz(seed, trials):
    out = []
    phis = {"square": Power(1.0, 2.0), "omega": build_example_omega(),
            "cubic": Power(0.25, 3.0)}
    gamma = L1Polygon()

    def eta(rng):
        label = list(phis)[int(rng.integers(3))]
        phi = phis[label]
        n = int(rng.integers(1, 65))
        mu, f, g = _measure(rng, n), _function(rng, n), _function(rng, n)
        if not (any(f.values) or any(g.values)):
            f = SampledFunction((1.0,) + f.values[1:])
        lhs = ngamma_norm(gamma, phi, f, g, mu)
        fg, mu2 = eta_concat(f, g, mu)
        rhs = luxemburg_norm(phi, fg, mu2)
        return abs(lhs - rhs) / (1.0 + rhs), [label, n]
    out.append(_worst("orlicz.eta_isometry_residual", trials, seed, 1e-9, eta))

    n_bf = min(trials, BRUTE_FORCE_CAP)

    def amemiya(rng):
        phi = phis["omega"]
        mu, f = _measure(rng, 2), SampledFunction(tuple(rng.uniform(0.1, 10.0, 2)))
        a = orlicz_norm(phi, f, mu)
        b = brute_force_orlicz_norm(phi, f, mu)
        return abs(a - b) / b, [list(mu.weights), list(f.values)]
    note = f"capped at {BRUTE_FORCE_CAP} trials" if trials > BRUTE_FORCE_CAP else ""
    out.append(_worst("orlicz.amemiya_vs_bruteforce[omega]", n_bf, seed, 1e-4, amemiya, note))

    def sandwich(rng):
        label = list(phis)[int(rng.integers(3))]
        phi = phis[label]
        n = int(rng.integers(1, 9))
        mu, f = _measure(rng, n), SampledFunction(tuple(rng.uniform(0.1, 10.0, n)))
        lux, orl = luxemburg_norm(phi, f, mu), orlicz_norm(phi, f, mu)
        excess = max(lux - orl, orl - 2.0 * lux) / lux
        return excess, [label, list(mu.weights), list(f.values)]
    out.append(_worst("orlicz.luxemburg_orlicz_sandwich", trials, seed, 1e-12, sandwich,
                      note="relative slack covers the equality case of t^2"))

    def lux_props(rng):
        label = list(phis)[int(rng.integers(3))]
        phi = phis[label]
        n = int(rng.integers(1, 9))
        mu, f, g = _measure(rng, n), _function(rng, n), _function(rng, n)
        if not any(f.values):
            return 0.0, None
        nf, ng = luxemburg_norm(phi, f, mu), luxemburg_norm(phi, g, mu)
        k = rng.uniform(0.1, 10.0)
        hom = abs(luxemburg_norm(phi, f.scale(k), mu) - k * nf) / (k * nf)
        tri = (luxemburg_norm(phi, f + g, mu) - nf - ng) / (1.0 + nf + ng)
        mod = abs(modular(phi, f.scale(1.0 / nf), mu) - 1.0)
        return max(hom, tri / 10.0, mod), [label, list(mu.weights), list(f.values)]
    out.append(_worst("orlicz.luxemburg_axioms", trials, seed, 1e-10, lux_props,
                      note="max of homogeneity, modular-at-norm, and triangle/10"))
    return out


SUITES = {"youngfn": suite_youngfn, "fnorm": suite_fnorm, "envelope": suite_envelope,
          "dirlimit": suite_dirlimit, "orlicz": suite_orlicz}


def run_suites(names, seed, trials, command=""):
    """Run the named suites (``"all"`` expands to every suite)."""
    if trials < 0:
        raise ValueError("trials must be >= 0")
    names = list(SUITES) if "all" in names else list(names)
    report = RunReport(command=command, seed=int(seed))
    if trials == 0:
        msg = "0 trials: sampled checks pass vacuously"
        report.warnings.append(msg)
        warnings.warn(msg, stacklevel=2)
    start = time.perf_counter()
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        report.checks.extend(SUITES[name](int(seed), int(trials)))
    report.wall_time = time.perf_counter() - start
    return report
