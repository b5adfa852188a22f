"""Orlicz-space norms on finite discrete measure spaces.

A measure is a vector of positive atom weights and a function is a vector of
values on those atoms, so every integral is a weighted sum.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from scipy.optimize import brentq

from ._roots import ConvergenceError, golden_section_max
from .youngfn import ConjugateYoung

__all__ = [
    "DiscreteMeasure",
    "SampledFunction",
    "GammaGauge",
    "L1Polygon",
    "SupportPolygon",
    "modular",
    "luxemburg_norm",
    "orlicz_norm",
    "brute_force_orlicz_norm",
    "ngamma_norm",
    "eta_concat",
    "DegenerateYoungError",
]


class DegenerateYoungError(ArithmeticError):
    """The Amemiya infimum is not attained at a finite scale."""


@dataclass(frozen=True)
class DiscreteMeasure:
    weights: tuple

    def __post_init__(self):
        w = tuple(float(v) for v in self.weights)
        if not w:
            raise ValueError("a measure needs at least one atom")
        if any(not (v > 0.0 and math.isfinite(v)) for v in w):
            raise ValueError("atom weights must be positive and finite")
        object.__setattr__(self, "weights", w)

    @property
    def atoms(self):
        return len(self.weights)

    @property
    def array(self):
        return np.asarray(self.weights)


@dataclass(frozen=True)
class SampledFunction:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    @property
    def array(self):
        return np.asarray(self.values)

    def __len__(self):
        return len(self.values)

    def __add__(self, other):
        if len(self) != len(other):
            raise ValueError("functions live on different measures")
        return SampledFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, c):
        return SampledFunction(tuple(c * v for v in self.values))


def _check(f, mu):
    if len(f.values) != mu.atoms:
        raise ValueError(f"function has {len(f.values)} values but the measure has {mu.atoms} atoms")


def modular(phi, f, mu):
    """``sum_i w_i * phi(|f_i|)``."""
    _check(f, mu)
    vals = np.abs(f.array)
    return math.fsum(w * phi(v) for w, v in zip(mu.weights, vals) if v != 0.0)


def _scaled_modular(phi, f, mu, k):
    return math.fsum(w * phi(abs(v) / k) for w, v in zip(mu.weights, f.values) if v != 0.0)


def _solve_gauge(level, top, full_output):
    """Root of the decreasing ``lam -> level(lam) - 1``, solved in ``log lam``.

    The bracket grows outwards from ``log top`` in unit steps and is refined
    with Brent's method; working in logs keeps subnormal and huge inputs in
    range.
    """
    excess = lambda x: level(math.exp(x)) - 1.0  # noqa: E731
    lo = hi = math.log(top)
    steps = 0
    while excess(lo) <= 0.0:
        lo -= 1.0
        steps += 1
        if math.exp(lo) == 0.0:
            raise ConvergenceError("norm lies below the double-precision range")
    while excess(hi) > 0.0:
        hi += 1.0
        steps += 1
        if math.isinf(math.exp(hi)):
            raise ConvergenceError("norm lies above the double-precision range")
    root, res = brentq(excess, lo, hi, xtol=1e-15, rtol=8.9e-16, full_output=True)
    lam = math.exp(root)
    if not full_output:
        return lam
    return lam, {"bracket": [math.exp(lo), math.exp(hi)], "bracket_steps": steps,
                 "iterations": res.iterations}


def luxemburg_norm(phi, f, mu, full_output=False):
    """Gauge norm ``inf {k > 0 : modular(phi, f/k) <= 1}``.

    For finite strictly increasing ``phi`` the infimum is the unique root of
    ``modular(phi, f/k) = 1``, bracketed and refined in ``log k``.
    ``full_output=True`` also returns solver diagnostics (bracket in ``k``,
    iteration counts).
    """
    _check(f, mu)
    if not any(f.values):
        return (0.0, {"bracket": [0.0, 0.0], "bracket_steps": 0, "iterations": 0}) \
            if full_output else 0.0
    top = max(abs(v) for v in f.values)
    return _solve_gauge(lambda lam: _scaled_modular(phi, f, mu, lam), top, full_output)


_RUNAWAY = 1e15


def _amemiya(phi, f, mu, log_k):
    k = math.exp(log_k)
    return (1.0 + _scaled_modular(phi, f, mu, 1.0 / k)) / k


def orlicz_norm(phi, f, mu):
    """Orlicz norm through the Amemiya formula ``inf_k (1 + modular(k f)) / k``.

    The objective is unimodal in ``k``; a bracket in ``log k`` is grown
    outwards and the minimum located by golden-section search.

    Raises
    ------
    DegenerateYoungError
        If the infimum escapes to ``k -> inf`` (e.g. for linear ``phi``).
    """
    _check(f, mu)
    if not any(f.values):
        return 0.0
    top = max(abs(v) for v in f.values)
    centre = -math.log(top)
    neg = lambda x: -_amemiya(phi, f, mu, x)  # noqa: E731
    a, b = centre - 1.0, centre + 1.0
    for _ in range(200):
        mid = neg(centre)
        left, right = neg(a), neg(b)
        if mid >= left and mid >= right:
            break
        if right > mid:
            centre, a, b = b, centre, b + 2.0 * (b - centre)
        else:
            centre, a, b = a, a - 2.0 * (centre - a), centre
        if b - a > 1500.0:
            raise DegenerateYoungError("Amemiya objective has no finite minimiser")
    else:
        raise DegenerateYoungError("could not bracket the Amemiya minimiser")
    x, best = golden_section_max(neg, a, b, tol=1e-13)
    # a linear-growth phi flattens the objective out to k -> inf
    if x + math.log(top) > math.log(_RUNAWAY):
        raise DegenerateYoungError("Amemiya infimum is approached only as k -> inf")
    return -best


def brute_force_orlicz_norm(phi, f, mu, grid=400):
    """Direct supremum ``sup { sum w|f g| : sum w Psi(|g|) <= 1 }`` on at most 3 atoms.

    The optimum spends the whole budget, so ``g_i = Psi^{-1}(b_i / w_i)`` for a
    budget split ``b`` on the simplex. The split is searched on a grid and then
    refined: by golden section for two atoms, by shrinking-grid search for three.
    """
    _check(f, mu)
    if mu.atoms > 3:
        raise ValueError("brute force is limited to 3 atoms")
    if not any(f.values):
        return 0.0
    psi = ConjugateYoung(phi)
    w, a = mu.weights, [abs(v) for v in f.values]

    def value(split):
        return math.fsum(wi * ai * psi.inverse(bi / wi) for wi, ai, bi in zip(w, a, split) if bi > 0.0)

    n = mu.atoms
    if n == 1:
        return value((1.0,))
    if n == 2:
        taus = np.linspace(0.0, 1.0, grid + 1)
        vals = [value((t, 1.0 - t)) for t in taus]
        i = int(np.argmax(vals))
        lo, hi = taus[max(i - 1, 0)], taus[min(i + 1, grid)]
        _, best = golden_section_max(lambda t: value((t, 1.0 - t)), lo, hi, tol=1e-12)
        return max(best, vals[i])
    # three atoms: coarse simplex grid, then zoom around the best point
    best_val, best_pt, h = -math.inf, (1 / 3, 1 / 3, 1 / 3), 1.0 / 40
    for i, j in itertools.product(range(41), repeat=2):
        if i + j <= 40:
            pt = (i * h, j * h, 1.0 - (i + j) * h)
            v = value(pt)
            if v > best_val:
                best_val, best_pt = v, pt
    for _ in range(40):
        improved = False
        for di, dj in itertools.product((-1, 0, 1), repeat=2):
            b0, b1 = best_pt[0] + di * h, best_pt[1] + dj * h
            if b0 < 0 or b1 < 0 or b0 + b1 > 1:
                continue
            v = value((b0, b1, 1.0 - b0 - b1))
            if v > best_val:
                best_val, best_pt, improved = v, (b0, b1, 1.0 - b0 - b1), True
        if not improved:
            h /= 2.0
    return best_val


class GammaGauge:
    """Convex, radially increasing planar gauge combining two modulars."""

    def __call__(self, x, y):
        raise NotImplementedError


class L1Polygon(GammaGauge):
    """``Gamma(x, y) = |x| + |y|``."""

    def __call__(self, x, y):
        return abs(x) + abs(y)

    def __repr__(self):
        return "L1Polygon()"


class SupportPolygon(GammaGauge):
    """Minkowski functional of a convex polygon given by its vertices.

    The vertices must be listed in convex position (any rotation), enclose
    the origin strictly, and lie within distance 1 of the origin.
    """

    def __init__(self, vertices):
        from scipy.spatial import ConvexHull

        v = np.asarray(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or len(v) < 3:
            raise ValueError("need at least three planar vertices")
        if np.any(np.hypot(v[:, 0], v[:, 1]) > 1.0 + 1e-12):
            raise ValueError("polygon vertices must lie within distance 1 of the origin")
        hull = ConvexHull(v)
        if len(hull.vertices) != len(v):
            raise ValueError("vertices are not in convex position")
        normals, offsets = hull.equations[:, :-1], -hull.equations[:, -1]
        if np.any(offsets <= 1e-12):
            raise ValueError("origin must lie strictly inside the polygon")
        self.vertices = v
        self._rows = normals / offsets[:, None]

    def __call__(self, x, y):
        return float(np.max(self._rows @ np.array([x, y], dtype=float)))

    def __repr__(self):
        return f"SupportPolygon({self.vertices.tolist()!r})"


def ngamma_norm(gamma, phi, f, g, mu, full_output=False):
    """``inf { lam > 0 : gamma(modular(f/lam), modular(g/lam)) <= 1 }``.

    Solved by bracketing and Brent's method in ``log lam``; the level
    function decreases strictly for non-zero input.
    """
    _check(f, mu)
    _check(g, mu)
    if not any(f.values) and not any(g.values):
        return (0.0, {"bracket": [0.0, 0.0], "bracket_steps": 0, "iterations": 0}) \
            if full_output else 0.0
    top = max(abs(v) for v in f.values + g.values)

    def level(lam):
        return gamma(_scaled_modular(phi, f, mu, lam), _scaled_modular(phi, g, mu, lam))

    return _solve_gauge(level, top, full_output)


def eta_concat(f, g, mu):
    """Concatenate ``(f, g)`` into one function on the doubled measure ``{1, 2} x S``."""
    _check(f, mu)
    if len(g.values) != len(f.values):
        raise ValueError("f and g must live on the same measure")
    return SampledFunction(f.values + g.values), DiscreteMeasure(mu.weights + mu.weights)
