"""Banach-envelope norms of Mulholland F-spaces and their diagnostics."""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull

from ._roots import golden_section_max
from .fnorm import fnorm, unit_sphere_contour
from .youngfn import asymptote_of

__all__ = [
    "EnvelopeNorm",
    "envelope_norm",
    "envelope_exponent",
    "envelope_ratio",
    "maximal_subspace_ratio",
    "HullReport",
    "hull_gauge",
    "envelope_hull_check",
    "dual_norm_bruteforce",
]


def envelope_norm(p, norms):
    """``(sum_i norms_i**p)**(1/p)``."""
    if not p > 1.0:
        raise ValueError(f"p must exceed 1, got {p}")
    a = np.asarray(norms, dtype=float)
    if np.any(a < 0.0):
        raise ValueError("component norms must be non-negative")
    top = float(a.max()) if a.size else 0.0
    if top == 0.0:
        return 0.0
    # scale out the largest entry so huge inputs don't overflow
    return top * float(np.sum((a / top) ** p)) ** (1.0 / p)


@dataclass(frozen=True)
class EnvelopeNorm:
    """The ``p``-sum norm ``(sum ||x_i||^p)^(1/p)``; ``p = M + 1``."""

    exponent: float

    def __call__(self, norms):
        return envelope_norm(self.exponent, norms)

    @classmethod
    def of(cls, phi):
        return cls(envelope_exponent(phi))


def envelope_exponent(phi):
    """``M + 1`` where ``M`` is the asymptotic slope of ``phi``'s characteristic."""
    if hasattr(phi, "chi"):
        return asymptote_of(phi.chi).slope + 1.0
    if hasattr(phi, "p"):
        return float(phi.p)
    raise TypeError(f"{type(phi).__name__} has no linear asymptote")


def envelope_ratio(phi, k, norms):
    """``fnorm(phi, k * norms) / (k * envelope_norm(M + 1, norms))``."""
    if k <= 0.0:
        raise ValueError("k must be positive")
    if not any(norms):
        raise ValueError("norms must not all be zero")
    p = envelope_exponent(phi)
    return fnorm(phi, [k * v for v in norms]) / (k * envelope_norm(p, norms))


def maximal_subspace_ratio(phi, alpha, u, v):
    """Homogeneity test quotient for the direct-sum element with norms ``(u, v)``.

    Computes ``phi(2a * phi^{-1}(phi(u) + phi(v))) / (phi(2a u) + phi(2a v))``
    with ``a = |alpha|``. If the element spanned a subspace on which the
    F-norm were homogeneous, this would equal 1 for every ``alpha``.
    """
    if u < 0.0 or v < 0.0 or (u == 0.0 and v == 0.0):
        raise ValueError("u, v must be non-negative and not both zero")
    a = abs(float(alpha))
    inner = fnorm(phi, [u, v])
    return phi(2.0 * a * inner) / (phi(2.0 * a * u) + phi(2.0 * a * v))


def hull_gauge(points, directions):
    """Minkowski functional of ``conv(points)`` evaluated at each direction.

    The hull is given by facets ``a.x <= b`` (``b > 0`` since the origin is
    interior) and the gauge of ``u`` is ``max_facets a.u / b``.
    """
    hull = ConvexHull(np.asarray(points, dtype=float))
    normals, offsets = hull.equations[:, :-1], -hull.equations[:, -1]
    if np.any(offsets <= 0.0):
        raise ValueError("origin is not interior to the hull")
    return np.max(np.asarray(directions, dtype=float) @ (normals / offsets[:, None]).T, axis=1)


@dataclass(frozen=True)
class HullReport:
    """Gap between the convex-hull gauge of scaled balls and the envelope norm."""

    scales: tuple
    gaps: tuple
    max_gauge_gap: float
    non_increasing: bool
    ratio_grid: tuple = field(default=())

    def as_dict(self):
        return {"scale": list(self.scales), "gap": list(self.gaps),
                "max_gauge_gap": self.max_gauge_gap,
                "non_increasing": self.non_increasing,
                "ratio_grid": list(self.ratio_grid)}


def envelope_hull_check(phi, resolution, scales=(1.0, 10.0, 100.0, 1000.0)):
    """Compare the hull of ``{fnorm <= s} / s`` with the envelope unit ball.

    For each scale ``s`` the contour ``{fnorm = s}`` is traced, shrunk by
    ``s``, and its convex hull's gauge is evaluated along the contour rays
    (where an inscribed polygon is exact for an already convex ball). The gap
    is the largest absolute difference to the envelope norm along those
    rays.
    """
    if resolution < 8:
        raise ValueError(f"degenerate hull: resolution must be >= 8, got {resolution}")
    p = envelope_exponent(phi)
    gaps, ratios = [], []
    for s in scales:
        theta, pts = unit_sphere_contour(phi, resolution, level=s)
        pts = pts / s
        dirs = np.column_stack([np.cos(theta), np.sin(theta)])
        g_hull = hull_gauge(pts, dirs)
        g_env = np.array([envelope_norm(p, np.abs(d)) for d in dirs])
        gaps.append(float(np.max(np.abs(g_hull - g_env))))
        ratios.append(envelope_ratio(phi, s, [1.0, 1.0]))
    non_inc = all(b <= a + 1e-12 for a, b in zip(gaps, gaps[1:]))
    return HullReport(tuple(float(s) for s in scales), tuple(gaps), max(gaps), non_inc,
                      tuple(ratios))


def dual_norm_bruteforce(p, x, grid=20001):
    """``sup {x . y : ||y||_p <= 1}`` for ``x`` in the plane.

    The ``p``-sphere is sampled by angle, each ray normalised onto it, and the
    best sample is polished by a golden-section search on the angle.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (2,):
        raise ValueError("dual_norm_bruteforce works in the plane")

    def value(th):
        c, s = math.cos(th), math.sin(th)
        r = (abs(c) ** p + abs(s) ** p) ** (1.0 / p)
        return (x[0] * c + x[1] * s) / r

    ths = np.linspace(0.0, 2.0 * math.pi, grid)
    c, s = np.cos(ths), np.sin(ths)
    vals = (x[0] * c + x[1] * s) / (np.abs(c) ** p + np.abs(s) ** p) ** (1.0 / p)
    i = int(np.argmax(vals))
    h = ths[1] - ths[0]
    _, best = golden_section_max(value, ths[i] - h, ths[i] + h, tol=1e-14)
    return max(best, float(vals[i]))
