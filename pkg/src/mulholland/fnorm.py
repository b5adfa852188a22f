"""F-norms and metrics on finite direct sums of normed components.

Each component ``X_i`` is modelled as ``R^d`` with a ``q``-norm. The F-norm of
a point ``(x_1, ..., x_n)`` depends only on the component norms:

    ||(x_1, ..., x_n)||_Phi = Phi^{-1}(sum_i Phi(||x_i||_i))
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ._roots import ConvergenceError, solve_increasing
from .youngfn import inverse_young

__all__ = [
    "NormedComponent",
    "DirectSumPoint",
    "fnorm",
    "dist",
    "MulhollandInequalityReport",
    "verify_mulholland_inequality",
    "NuReport",
    "nu_estimate",
    "LocalBoundednessReport",
    "local_boundedness_probe",
    "sample_point",
    "unit_sphere_contour",
    "radial_root",
]


@dataclass(frozen=True)
class NormedComponent:
    """``R^dimension`` equipped with the ``q``-norm, ``1 <= q <= inf``."""

    dimension: int = 1
    q: float = 2.0

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if not self.q >= 1.0:
            raise ValueError(f"q must be >= 1, got {self.q}")

    def norm(self, x):
        x = np.asarray(x, dtype=float).reshape(-1)
        if x.shape[0] != self.dimension:
            raise ValueError(f"expected a vector of length {self.dimension}, got {x.shape[0]}")
        return float(np.linalg.norm(x, ord=self.q)) if self.dimension > 1 else abs(float(x[0]))


@dataclass(frozen=True)
class DirectSumPoint:
    """A point of a finite direct sum: one vector per component."""

    components: tuple
    space: tuple = field(default=None)

    def __post_init__(self):
        comps = tuple(np.asarray(c, dtype=float).reshape(-1) for c in self.components)
        object.__setattr__(self, "components", comps)
        if self.space is None:
            object.__setattr__(self, "space",
                               tuple(NormedComponent(len(c)) for c in comps))
        elif len(self.space) != len(comps):
            raise ValueError(f"{len(comps)} components for a space with {len(self.space)} factors")

    def norms(self):
        return [sp.norm(c) for sp, c in zip(self.space, self.components)]

    def _check(self, other):
        if len(self.components) != len(other.components) or any(
                a.shape != b.shape for a, b in zip(self.components, other.components)):
            raise ValueError("direct-sum points have different shapes")

    def __add__(self, other):
        self._check(other)
        return DirectSumPoint(tuple(a + b for a, b in zip(self.components, other.components)),
                              self.space)

    def __sub__(self, other):
        self._check(other)
        return DirectSumPoint(tuple(a - b for a, b in zip(self.components, other.components)),
                              self.space)

    def scale(self, k):
        return DirectSumPoint(tuple(k * c for c in self.components), self.space)

    @classmethod
    def zeros_like(cls, other):
        return cls(tuple(np.zeros_like(c) for c in other.components), other.space)


def fnorm(phi, norms):
    """``Phi^{-1}(sum_i Phi(norms_i))`` for non-negative component norms.

    A point with at most one non-zero component norm is returned unchanged
    (``Phi^{-1}(Phi(a)) = a`` exactly), so axis elements are evaluated
    without solver round-off.
    """
    vals = [float(v) for v in norms]
    if any(v < 0.0 for v in vals):
        raise ValueError("component norms must be non-negative")
    nz = [v for v in vals if v != 0.0]
    if not nz:
        return 0.0
    if len(nz) == 1:
        return nz[0]
    # Phi^{-1}(sum Phi(a_i)) >= max a_i; keep that exact under round-off
    return max(inverse_young(phi, math.fsum(phi(v) for v in nz)), max(nz))


def dist(phi, x, y):
    """Metric ``d_Phi(x, y) = ||x - y||_Phi`` between two full-vector points."""
    if not isinstance(x, DirectSumPoint) or not isinstance(y, DirectSumPoint):
        raise TypeError("dist needs DirectSumPoint arguments (full-vector form)")
    return fnorm(phi, (x - y).norms())


@dataclass(frozen=True)
class MulhollandInequalityReport:
    lhs: float
    rhs: float
    holds: bool


def verify_mulholland_inequality(phi, a, b, rtol=1e-9):
    """Compare ``Phi^{-1}(sum Phi(a+b))`` with ``Phi^{-1}(sum Phi(a)) + Phi^{-1}(sum Phi(b))``."""
    if len(a) != len(b):
        raise ValueError("a and b must have equal length")
    lhs = fnorm(phi, [x + y for x, y in zip(a, b)])
    rhs = fnorm(phi, a) + fnorm(phi, b)
    return MulhollandInequalityReport(lhs, rhs, lhs <= rhs + rtol * (1.0 + rhs))


def sample_point(rng, space, r_min=1e-3, r_max=1e3):
    """Random point: isotropic direction per component, log-uniform radius."""
    comps = []
    for sp in space:
        v = rng.standard_normal(sp.dimension)
        while not v.any():
            v = rng.standard_normal(sp.dimension)
        v /= sp.norm(v)
        comps.append(v * math.exp(rng.uniform(math.log(r_min), math.log(r_max))))
    return DirectSumPoint(tuple(comps), tuple(space))


@dataclass(frozen=True)
class NuReport:
    """Empirical lower bound for the coefficient of non-homogeneity."""

    nu_hat: float
    per_regime: dict
    samples: int


def nu_estimate(phi, space, samples, k_grid, seed=0):
    """Largest observed ``||kX|| / (k ||X||)`` over random ``X`` and ``k``.

    ``per_regime`` reports the maximum separately for ``k < 1`` and
    ``k >= 1``; only the latter regime is covered by the homogeneity bound
    for characteristic functions with a linear asymptote.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    ks = [float(k) for k in k_grid]
    if any(k <= 0.0 for k in ks):
        raise ValueError("k_grid must be positive")
    rng = np.random.default_rng(seed)
    regimes = {"k<1": -math.inf, "k>=1": -math.inf}
    for _ in range(samples):
        x = sample_point(rng, space)
        norms = x.norms()
        base = fnorm(phi, norms)
        for k in ks:
            ratio = fnorm(phi, [k * v for v in norms]) / (k * base)
            key = "k<1" if k < 1.0 else "k>=1"
            regimes[key] = max(regimes[key], ratio)
    per_regime = {key: (v if v > -math.inf else None) for key, v in regimes.items()}
    nu_hat = max(v for v in regimes.values())
    return NuReport(nu_hat, per_regime, samples)


@dataclass(frozen=True)
class LocalBoundednessReport:
    inclusion1: bool
    inclusion2: bool
    checked1: int
    checked2: int
    witness: object = None


def local_boundedness_probe(phi, r_o, samples, space=None, scales=(1.0, 10.0, 1e3), seed=0):
    """Sample the two ball inclusions behind local boundedness of a 2-sum.

    inclusion1: every sampled point with F-norm < 1 has both component
    norms < 1. inclusion2: for ``||x||, ||y|| < r_o`` and each scale ``c``,
    the point ``(c x, c y) / (2c)`` has F-norm at most ``r_o``.
    """
    if not 0.0 < r_o < 1.0:
        raise ValueError("r_o must lie in (0, 1)")
    space = tuple(space) if space is not None else (NormedComponent(2), NormedComponent(2))
    if len(space) != 2:
        raise ValueError("the probe works on two components")
    rng = np.random.default_rng(seed)
    ok1 = ok2 = True
    n1 = n2 = 0
    witness = None
    for _ in range(samples):
        x = sample_point(rng, space, 1e-3, 2.0)
        norms = x.norms()
        if fnorm(phi, norms) < 1.0:
            n1 += 1
            if not all(v < 1.0 for v in norms):
                ok1, witness = False, ("inclusion1", norms)
        y = sample_point(rng, space, 1e-3, 1.0)
        # shrink radially into the open r_o ball of each component
        y = DirectSumPoint(tuple(c * (r_o * rng.uniform(0.0, 1.0)) / max(sp.norm(c), 1e-300)
                                 for sp, c in zip(space, y.components)), space)
        for c in scales:
            n2 += 1
            z = y.scale(c).scale(1.0 / (2.0 * c))
            if fnorm(phi, z.norms()) > r_o * (1.0 + 1e-12):
                ok2, witness = False, ("inclusion2", c, y.norms())
    return LocalBoundednessReport(ok1, ok2, n1, n2, witness)


def radial_root(phi, direction, level=1.0):
    """``rho > 0`` with ``fnorm(phi, rho * |direction|) == level``."""
    a = [abs(float(v)) for v in direction]
    if not any(a):
        raise ValueError("direction must be non-zero")
    return solve_increasing(lambda rho: fnorm(phi, [rho * v for v in a]), level,
                            lo=0.0, hi=level / max(a))


def unit_sphere_contour(phi, resolution, level=1.0):
    """Level set ``{fnorm = level}`` of a two-scalar-component F-norm.

    Rays at ``resolution + 1`` angles uniform on ``[0, pi/2]`` are solved for
    their radial root and mirrored into the other quadrants.

    Returns
    -------
    theta : ndarray, shape (4 * resolution,)
        Polar angles in ``[0, 2 pi)``, increasing (counterclockwise).
    points : ndarray, shape (4 * resolution, 2)
        Contour points ``(s, t)``.
    """
    if resolution < 8:
        raise ValueError(f"resolution must be >= 8, got {resolution}")
    angles = np.linspace(0.0, math.pi / 2.0, int(resolution) + 1)
    rho = np.empty_like(angles)
    for j, th in enumerate(angles):
        c, s = math.cos(th), math.sin(th)
        if j == 0:
            c, s = 1.0, 0.0
        elif j == len(angles) - 1:
            c, s = 0.0, 1.0
        try:
            rho[j] = radial_root(phi, (c, s), level)
        except ConvergenceError as exc:
            raise ConvergenceError(f"ray {j} (theta={th!r}) failed: {exc}") from exc
    # first quadrant, then its mirror image in the second, then the point reflection
    half_rho = np.concatenate([rho, rho[-2:0:-1]])
    half_theta = np.concatenate([angles, math.pi - angles[-2:0:-1]])
    theta_out = np.concatenate([half_theta, half_theta + math.pi])
    rho_out = np.concatenate([half_rho, half_rho])
    points = np.column_stack([rho_out * np.cos(theta_out), rho_out * np.sin(theta_out)])
    n = int(resolution)
    for k in range(4):
        # pin the axis points exactly
        points[k * n] = rho_out[k * n] * np.array([(1, 0), (0, 1), (-1, 0), (0, -1)][k])
    return theta_out, points
