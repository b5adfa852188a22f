"""Young functions of Mulholland type, their inverses, conjugates and growth checks.

A Young function satisfies the Mulholland condition when it can be written as
``Phi(t) = |t| * exp(chi(log|t|))`` with a convex, increasing characteristic
function ``chi``. The main concrete instance here is a piecewise-linear
``chi`` with slopes ``m_0 < m_1 < ...`` on segments of equal length (``ln 2``
by default) whose slopes converge to a finite limit, so that ``chi`` has a
linear asymptote.

All objects are immutable; every function is pure.
"""

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ._roots import ConvergenceError, golden_section_max, solve_increasing

__all__ = [
    "LN2",
    "GeometricSlopes",
    "ListSlopes",
    "CallableSlopes",
    "PiecewiseCharacteristic",
    "YoungFunction",
    "MulhollandPiecewise",
    "Power",
    "AnalyticCharacteristic",
    "AsymptoteLine",
    "ConjugateYoung",
    "Delta2Report",
    "MulhollandReport",
    "DivergenceError",
    "ConvergenceError",
    "characteristic_eval",
    "eval_young",
    "inverse_young",
    "conjugate_numeric",
    "conjugate_piecewise",
    "conjugate_closed_form_omega",
    "check_delta2",
    "check_mulholland",
    "asymptote_of",
    "build_example_omega",
    "build_interpolation_young",
    "asymptotic_young",
]

LN2 = math.log(2.0)
# log(t) never exceeds ~710 for finite doubles; tables stop a little beyond.
_LOG_RANGE = 800.0
_DIVERGENCE_LIMIT = 1e15


class DivergenceError(ArithmeticError):
    """The supremum defining a conjugate is infinite."""


# ---------------------------------------------------------------------------
# slope rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeometricSlopes:
    """Slopes ``m_r = limit - deficit * ratio**r`` for ``r = 0, 1, ...``."""

    limit: float
    deficit: float
    ratio: float

    def __post_init__(self):
        if not 0.0 < self.ratio < 1.0:
            raise ValueError(f"ratio must lie in (0, 1), got {self.ratio}")
        if self.deficit < 0.0:
            raise ValueError(f"deficit must be >= 0, got {self.deficit}")
        if self.limit - self.deficit <= 0.0:
            raise ValueError("first slope limit - deficit must be positive")

    def __call__(self, r):
        return self.limit - self.deficit * self.ratio ** r

    def partial_sum(self, r):
        """Sum of the first ``r`` slopes."""
        q = self.ratio
        return r * self.limit - self.deficit * (1.0 - q ** r) / (1.0 - q)

    @property
    def total_deficit(self):
        """``sum_r (limit - m_r)``, finite for geometric rules."""
        return self.deficit / (1.0 - self.ratio)


@dataclass(frozen=True)
class ListSlopes:
    """Explicit slopes; the last value is repeated forever."""

    values: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ValueError("slope list is empty")
        if vals[0] <= 0.0:
            raise ValueError("slopes must be positive")
        if any(b < a for a, b in zip(vals, vals[1:])):
            raise ValueError("slopes must be non-decreasing")
        object.__setattr__(self, "values", vals)

    @property
    def limit(self):
        return self.values[-1]

    def __call__(self, r):
        return self.values[min(r, len(self.values) - 1)]

    def partial_sum(self, r):
        n = len(self.values)
        head = math.fsum(self.values[:min(r, n)])
        return head + max(r - n, 0) * self.values[-1]

    @property
    def total_deficit(self):
        return math.fsum(self.limit - v for v in self.values)


@dataclass(frozen=True)
class CallableSlopes:
    """Slopes from an arbitrary increasing rule ``r -> m_r`` with a known limit.

    The intercept of the asymptote is not available in closed form for such
    rules; :func:`asymptote_of` extrapolates it numerically.
    """

    rule: object
    limit: float

    def __call__(self, r):
        return float(self.rule(r))

    def partial_sum(self, r):
        return math.fsum(self(i) for i in range(r))

    total_deficit = None


# ---------------------------------------------------------------------------
# characteristic functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiecewiseCharacteristic:
    """Even, convex, piecewise-linear characteristic function.

    On ``[r L, (r + 1) L]`` the slope is ``slopes(r)``; ``chi(0) = 0`` and
    ``chi(x) = chi(|x|)``.

    Parameters
    ----------
    slopes : GeometricSlopes, ListSlopes or CallableSlopes
        Increasing positive slope rule.
    segment_length : float
        Breakpoint spacing ``L``; the default ``ln 2`` puts the breakpoints
        of the associated Young function at the powers of two.
    """

    slopes: object
    segment_length: float = LN2

    def __post_init__(self):
        if self.segment_length <= 0.0:
            raise ValueError("segment_length must be positive")

    @property
    def limit_slope(self):
        return float(self.slopes.limit)

    @cached_property
    def _tables(self):
        n = int(math.ceil(_LOG_RANGE / self.segment_length)) + 2
        m = [self.slopes(r) for r in range(n + 1)]
        if m[0] <= 0.0 or any(b < a for a, b in zip(m, m[1:])):
            raise ValueError("slopes must be positive and non-decreasing")
        if any(v > self.limit_slope * (1.0 + 1e-15) for v in m):
            raise ValueError("slopes must not exceed the limit slope")
        L = self.segment_length
        knots = [L * self.slopes.partial_sum(r) for r in range(n + 1)]
        return m, knots

    def knot_value(self, r):
        """``chi(r L)`` for a segment index ``r >= 0``."""
        _, knots = self._tables
        if r < len(knots):
            return knots[r]
        return self.segment_length * self.slopes.partial_sum(r)

    def _eval_nonneg(self, x):
        m, knots = self._tables
        L = self.segment_length
        r = min(int(x // L), len(m) - 1)
        return knots[r] + m[r] * (x - r * L)

    def __call__(self, x):
        if np.ndim(x) == 0:
            return self._eval_nonneg(abs(float(x)))
        m, knots = self._tables
        ax = np.abs(np.asarray(x, dtype=float))
        r = np.minimum(np.floor(ax / self.segment_length).astype(np.int64), len(m) - 1)
        m_arr, k_arr = np.asarray(m), np.asarray(knots)
        return k_arr[r] + m_arr[r] * (ax - r * self.segment_length)

    def log_profile(self, s):
        """Characteristic used inside the Young function at ``s = log t``.

        Equal to ``chi(s)`` for ``s >= 0``; for ``s < 0`` it continues the
        first segment linearly (``m_0 * s``) so that the Young function is
        increasing near zero with ``Phi(t) = t**(1 + m_0)`` on ``[0, e^L]``.
        """
        if np.ndim(s) == 0:
            s = float(s)
            return self._eval_nonneg(s) if s >= 0.0 else self.slopes(0) * s
        s = np.asarray(s, dtype=float)
        return np.where(s >= 0.0, self(np.maximum(s, 0.0)), self.slopes(0) * s)

    def solve_log(self, g):
        """``s`` with ``s + log_profile(s) == g`` (both sides increasing in ``s``)."""
        m, knots = self._tables
        if g < 0.0:
            return g / (1.0 + m[0])
        L = self.segment_length
        # G(rL) = rL + knots[r] is increasing in r
        lo, hi = 0, len(m) - 1
        if g >= hi * L + knots[hi]:
            return hi * L + (g - hi * L - knots[hi]) / (1.0 + m[hi])
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if mid * L + knots[mid] <= g:
                lo = mid
            else:
                hi = mid
        return lo * L + (g - lo * L - knots[lo]) / (1.0 + m[lo])

    def right_slope(self, s):
        """Right derivative of :meth:`log_profile` at scalar ``s``."""
        if s < 0.0:
            return self.slopes(0)
        m, _ = self._tables
        return m[min(int(s // self.segment_length), len(m) - 1)]


def characteristic_eval(chi, x):
    """Evaluate a piecewise characteristic function at ``x`` (even in ``x``)."""
    return chi(x)


# ---------------------------------------------------------------------------
# Young functions
# ---------------------------------------------------------------------------

class YoungFunction:
    """Base class for finite, strictly increasing Young functions.

    Subclasses implement ``_scalar(t)`` for ``t >= 0``, ``log_at_exp(s)``
    (``log Phi(e^s)``) and ``_dlog(s)`` (its right derivative in ``s``).
    """

    def _scalar(self, t):
        raise NotImplementedError

    def log_at_exp(self, s):
        raise NotImplementedError

    def _dlog(self, s):
        raise NotImplementedError

    def __call__(self, t):
        if np.ndim(t) == 0:
            return self._scalar(abs(float(t)))
        arr = np.abs(np.asarray(t, dtype=float))
        return np.array([self._scalar(v) for v in arr.ravel()]).reshape(arr.shape)

    def derivative(self, t):
        """Right derivative ``Phi'(t+)`` for ``t >= 0``."""
        t = abs(float(t))
        if t == 0.0:
            return self._derivative_at_zero()
        val = self._scalar(t)
        if math.isinf(val):
            return math.inf
        return val * self._dlog(math.log(t)) / t

    def _derivative_at_zero(self):
        return 0.0

    def inverse(self, y):
        return inverse_young(self, y)

    # Subclasses with an exact segment inverse override this.
    _direct_inverse = None

    def conjugate(self):
        return ConjugateYoung(self)


def _safe_exp(x):
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class MulhollandPiecewise(YoungFunction):
    """``Phi(t) = |t| exp(chi(log|t|))`` with a piecewise-linear ``chi``."""

    chi: PiecewiseCharacteristic

    def _scalar(self, t):
        if t == 0.0:
            return 0.0
        return t * _safe_exp(self.chi.log_profile(math.log(t)))

    def __call__(self, t):
        if np.ndim(t) == 0:
            return self._scalar(abs(float(t)))
        arr = np.abs(np.asarray(t, dtype=float))
        out = np.zeros_like(arr)
        pos = arr > 0.0
        with np.errstate(over="ignore"):
            out[pos] = arr[pos] * np.exp(self.chi.log_profile(np.log(arr[pos])))
        return out

    def log_at_exp(self, s):
        return s + self.chi.log_profile(s)

    def _dlog(self, s):
        return 1.0 + self.chi.right_slope(s)

    def _direct_inverse(self, y):
        t = math.exp(self.chi.solve_log(math.log(y)))
        # one Newton step removes the rounding of exp/log
        d = self.derivative(t)
        if d > 0.0 and math.isfinite(d):
            t -= (self._scalar(t) - y) / d
        return t

    @property
    def limit_slope(self):
        return self.chi.limit_slope


@dataclass(frozen=True)
class Power(YoungFunction):
    """``Phi(t) = c |t|**p`` with ``c > 0`` and ``p >= 1``."""

    c: float
    p: float

    def __post_init__(self):
        if self.c <= 0.0:
            raise ValueError(f"c must be positive, got {self.c}")
        if self.p < 1.0:
            raise ValueError(f"p must be >= 1, got {self.p}")

    def _scalar(self, t):
        try:
            return self.c * t ** self.p
        except OverflowError:
            return math.inf

    def __call__(self, t):
        if np.ndim(t) == 0:
            return self._scalar(abs(float(t)))
        with np.errstate(over="ignore"):
            return self.c * np.abs(np.asarray(t, dtype=float)) ** self.p

    def log_at_exp(self, s):
        if np.ndim(s):
            s = np.asarray(s, dtype=float)
        return math.log(self.c) + self.p * s

    def _dlog(self, s):
        return self.p

    def _derivative_at_zero(self):
        return self.c if self.p == 1.0 else 0.0

    def _direct_inverse(self, y):
        return (y / self.c) ** (1.0 / self.p)


_ANALYTIC = {
    # name: (chi, chi')
    "sinh": (math.sinh, math.cosh),
    "log1p": (lambda s: math.log1p(abs(s)),
              lambda s: math.copysign(1.0, s) / (1.0 + abs(s))),
}


@dataclass(frozen=True)
class AnalyticCharacteristic(YoungFunction):
    """``Phi(t) = |t| exp(chi(log|t|))`` with a named closed-form ``chi``.

    ``"sinh"`` is the classical function failing the doubling condition;
    ``"log1p"`` (``chi(s) = log(1 + |s|)``) has a concave characteristic and
    serves as a counterexample to log-log convexity.
    """

    name: str

    def __post_init__(self):
        if self.name not in _ANALYTIC:
            raise ValueError(f"unknown analytic characteristic {self.name!r}; "
                             f"choose from {sorted(_ANALYTIC)}")

    def _chi(self, s):
        return _ANALYTIC[self.name][0](s)

    def _scalar(self, t):
        if t == 0.0:
            return 0.0
        try:
            return t * _safe_exp(self._chi(math.log(t)))
        except OverflowError:
            return math.inf

    def log_at_exp(self, s):
        if np.ndim(s):
            return np.array([self.log_at_exp(float(v)) for v in np.ravel(s)]).reshape(np.shape(s))
        try:
            return s + self._chi(s)
        except OverflowError:
            return math.inf

    def _dlog(self, s):
        try:
            return 1.0 + _ANALYTIC[self.name][1](s)
        except OverflowError:
            return math.inf


def eval_young(phi, t):
    """``Phi(t)``; zero at ``t = 0``."""
    return phi(t)


def inverse_young(phi, y):
    """Unique ``t >= 0`` with ``phi(t) == y``.

    Piecewise-Mulholland and power functions are inverted segment-exactly in
    log coordinates followed by one Newton step. Otherwise the bracket
    ``[0, 1]`` is doubled until it contains the root, which is then refined
    to full double precision with Brent's method.

    Raises
    ------
    ConvergenceError
        If no bracket is found or the iteration cap (10**4) is reached.
    """
    y = float(y)
    if y < 0.0:
        raise ValueError(f"inverse_young needs y >= 0, got {y}")
    if y == 0.0:
        return 0.0
    if math.isinf(y):
        return math.inf
    if phi._direct_inverse is not None:
        return phi._direct_inverse(y)
    return solve_increasing(phi, y)


# ---------------------------------------------------------------------------
# conjugates
# ---------------------------------------------------------------------------

def conjugate_numeric(phi, t):
    """``sup_{x >= 0} (x |t| - phi(x))`` from the first-order condition.

    The maximiser is the point where the (monotone) right derivative of
    ``phi`` crosses ``|t|``. It is bracketed by doubling, narrowed by
    bisection on the derivative and polished with a golden-section search of
    the objective inside the final bracket, which also handles kinks.

    Raises
    ------
    DivergenceError
        If the derivative stays below ``|t|`` up to ``x = 1e15``.
    """
    t = abs(float(t))
    if t == 0.0:
        return 0.0
    d = phi.derivative
    if d(0.0) >= t:
        return 0.0
    lo, hi = 0.0, 1.0
    while d(hi) <= t:
        lo, hi = hi, 2.0 * hi
        if hi > _DIVERGENCE_LIMIT:
            raise DivergenceError(f"conjugate is +inf at t={t}: objective still "
                                  f"increasing at x={lo:g}")
    for _ in range(2000):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo <= 1e-15 * hi:
            break
        if d(mid) > t:
            hi = mid
        else:
            lo = mid
    _, val = golden_section_max(lambda x: x * t - phi(x), lo, hi)
    return max(val, 0.0)


def conjugate_piecewise(phi, t):
    """Closed-form conjugate of a :class:`MulhollandPiecewise` function.

    On the segment ``I_r = [e^{rL}, e^{(r+1)L}]`` the function is the power
    ``C_r x**(m_r + 1)``, so the segment maximum of ``x t - phi(x)`` is either
    the interior critical value

        m_r / (1 + m_r)**((1 + m_r)/m_r) * C_r**(-1/m_r) * t**((1 + m_r)/m_r)

    or the value at the nearer endpoint. Segment 0 is extended down to 0.
    The overall supremum is the maximum over segments; since the objective
    is concave, the segment maxima are unimodal in ``r`` and the scan stops
    after two consecutive decreases past the best segment.
    """
    t = abs(float(t))
    if t == 0.0:
        return 0.0
    chi = phi.chi
    L = chi.segment_length
    best = -math.inf
    best_r = 0
    drops = 0
    r = 0
    while True:
        m = chi.slopes(r)
        log_c = chi.knot_value(r) - m * r * L
        a = 0.0 if r == 0 else math.exp(r * L)
        b = math.exp((r + 1) * L)
        # interior critical point x_r(t) = (t / (C_r (m_r + 1)))**(1/m_r)
        log_x = (math.log(t) - log_c - math.log1p(m)) / m
        x = math.exp(log_x)
        if a <= x <= b:
            val = math.exp(math.log(m) - (1.0 + m) / m * math.log1p(m)
                           - log_c / m + (1.0 + m) / m * math.log(t))
        else:
            xe = a if x < a else b
            val = t * xe - math.exp(log_c) * xe ** (m + 1.0)
        if val > best:
            best, best_r, drops = val, r, 0
        elif r > best_r:
            drops += 1
            if drops >= 2:
                break
        r += 1
        if (r + 1) * L > 700.0:
            break
    return max(best, 0.0)


def conjugate_closed_form_omega(t):
    """Conjugate of the example function ``Omega`` (slopes ``2 - 2**-r``)."""
    return conjugate_piecewise(_OMEGA, t)


@dataclass(frozen=True)
class ConjugateYoung(YoungFunction):
    """Complementary Young function ``Psi(y) = sup_x (x|y| - Phi(x))``.

    ``strategy`` is ``"numeric"`` (first-order condition) or ``"closed"``
    (segment formula, only for :class:`MulhollandPiecewise` bases).
    """

    base: YoungFunction
    strategy: str = "numeric"

    def __post_init__(self):
        if self.strategy not in ("numeric", "closed"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.strategy == "closed" and not isinstance(self.base, MulhollandPiecewise):
            raise ValueError("closed-form conjugate needs a MulhollandPiecewise base")

    def _scalar(self, t):
        if self.strategy == "closed":
            return conjugate_piecewise(self.base, t)
        return conjugate_numeric(self.base, t)

    def log_at_exp(self, s):
        if np.ndim(s):
            return np.array([self.log_at_exp(float(v)) for v in np.ravel(s)]).reshape(np.shape(s))
        v = self._scalar(math.exp(s))
        return math.log(v) if v > 0.0 else -math.inf

    def maximiser(self, t):
        """The point ``x*`` attaining the supremum (also ``Psi'(t)``)."""
        t = abs(float(t))
        d = self.base.derivative
        if t == 0.0 or d(0.0) >= t:
            return 0.0
        lo, hi = 0.0, 1.0
        while d(hi) <= t:
            lo, hi = hi, 2.0 * hi
        for _ in range(2000):
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if d(mid) > t:
                hi = mid
            else:
                lo = mid
        return hi

    def derivative(self, t):
        return self.maximiser(t)

    def inverse(self, y):
        """``Psi^{-1}(y)`` through the maximiser parametrisation.

        ``Psi(Phi'(x)) = x Phi'(x) - Phi(x)`` is increasing in ``x``; the
        root ``x*`` of ``x Phi'(x+) - Phi(x) >= y`` is located by bisection and
        ``Psi`` is affine in its argument across a kink of ``Phi'`` at ``x*``.
        """
        y = float(y)
        if y <= 0.0:
            return 0.0
        phi, d = self.base, self.base.derivative

        def gain(x):
            return x * d(x) - phi(x)

        lo, hi = 0.0, 1.0
        while gain(hi) < y:
            lo, hi = hi, 2.0 * hi
            if hi > 1e300:
                raise ConvergenceError("could not bracket conjugate inverse")
        for _ in range(2000):
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if gain(mid) >= y:
                hi = mid
            else:
                lo = mid
        x = hi
        return (y + phi(x)) / x


# ---------------------------------------------------------------------------
# growth conditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Delta2Report:
    """Sampled doubling-condition verdict (evidence, not proof)."""

    satisfied: bool
    constant: float
    witness: float
    knee: float
    tail_slope: float
    grid: np.ndarray = field(repr=False)
    ratios: np.ndarray = field(repr=False)
    sampled: bool = True

    def as_dict(self):
        return {"satisfied": self.satisfied, "constant": self.constant,
                "witness": self.witness, "knee": self.knee,
                "tail_slope": self.tail_slope, "sampled": self.sampled,
                "grid_points": int(len(self.grid)),
                "t_min": float(self.grid[0]), "t_max": float(self.grid[-1])}


def _knee(ts, ratios, bound):
    above = np.nonzero(~(ratios <= bound))[0]
    if len(above) == 0:
        return float(ts[0])
    if above[-1] == len(ts) - 1:
        return math.inf
    return float(ts[above[-1] + 1])


def check_delta2(phi, t_min, t_max, grid, bound=None, tail_fraction=0.25,
                 slope_tol=0.01):
    """Sample ``phi(2t) / phi(t)`` on a log-spaced grid.

    The verdict is ``satisfied`` when every sampled ratio is finite and the
    ratio has stopped growing over the last ``tail_fraction`` of the grid
    (log-log slope at most ``slope_tol``). ``constant`` is the observed
    supremum and ``witness`` its location. ``knee`` is the first grid point
    beyond which the ratio stays below ``bound`` (default: within 1% of the
    final sampled ratio).
    """
    if not 0.0 < t_min < t_max:
        raise ValueError("need 0 < t_min < t_max")
    if grid < 2:
        raise ValueError("grid must have at least 2 points")
    ts = np.geomspace(t_min, t_max, int(grid))
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        num = np.asarray(phi(2.0 * ts), dtype=float)
        den = np.asarray(phi(ts), dtype=float)
        ratios = num / den
    ratios = np.where(np.isnan(ratios), np.inf, ratios)
    finite = np.isfinite(ratios)
    if not finite.all():
        first_bad = int(np.argmin(finite))
        return Delta2Report(False, math.inf, float(ts[first_bad]), math.inf,
                            math.inf, ts, ratios)
    i_max = int(np.argmax(ratios))
    k0 = min(int(len(ts) * (1.0 - tail_fraction)), len(ts) - 2)
    tail_slope = float((math.log(ratios[-1]) - math.log(ratios[k0]))
                       / (math.log(ts[-1]) - math.log(ts[k0])))
    if bound is None:
        bound = ratios[-1] * 1.01
    return Delta2Report(
        satisfied=bool(tail_slope <= slope_tol),
        constant=float(ratios[i_max]),
        witness=float(ts[i_max]),
        knee=_knee(ts, ratios, bound),
        tail_slope=tail_slope,
        grid=ts,
        ratios=ratios,
    )


@dataclass(frozen=True)
class MulhollandReport:
    """Sampled log-log convexity verdict."""

    satisfied: bool
    min_second_difference: float
    witness: float

    def as_dict(self):
        return {"satisfied": self.satisfied,
                "min_second_difference": self.min_second_difference,
                "witness": self.witness, "sampled": True}


def check_mulholland(phi, s_min, s_max, grid, rtol=1e-9):
    """Test convexity of ``g(s) = log phi(e^s)`` by second differences.

    Satisfied iff the smallest second difference is at least
    ``-rtol * max(1, max|g|)``.
    """
    if grid < 3:
        raise ValueError("grid must have at least 3 points")
    s = np.linspace(s_min, s_max, int(grid))
    g = np.asarray(phi.log_at_exp(s), dtype=float)
    d2 = g[2:] - 2.0 * g[1:-1] + g[:-2]
    scale = max(1.0, float(np.max(np.abs(g[np.isfinite(g)]))))
    i = int(np.argmin(d2))
    return MulhollandReport(bool(d2[i] >= -rtol * scale), float(d2[i]), float(s[i + 1]))


# ---------------------------------------------------------------------------
# asymptotes and constructors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AsymptoteLine:
    """The line ``y = slope * x + intercept`` in characteristic coordinates."""

    slope: float
    intercept: float


def _aitken(seq):
    a, b, c = seq[-3], seq[-2], seq[-1]
    den = (c - b) - (b - a)
    if den == 0.0:
        return c
    try:
        return c - (c - b) ** 2 / den
    except OverflowError:
        return math.inf


def asymptote_of(chi):
    """Linear asymptote of a piecewise characteristic at ``+inf``.

    Slope is the limit slope ``M``. The intercept is
    ``lim_r chi(rL) - M r L = -L * sum_r (M - m_r)``, exact for geometric and
    list rules; for a general rule the partial sums are extrapolated with
    repeated Aitken acceleration.

    Raises
    ------
    ValueError
        If the extrapolated intercept does not settle (no linear asymptote).
    """
    M = chi.limit_slope
    L = chi.segment_length
    if not math.isfinite(M):
        raise ValueError("slopes do not converge: no linear asymptote")
    deficit = chi.slopes.total_deficit
    if deficit is not None:
        return AsymptoteLine(M, -L * deficit)
    seq, estimates = [], []
    partial = 0.0
    for r in range(1, 4097):
        partial += M - chi.slopes(r - 1)
        seq.append(-L * partial)
        if r >= 3 and (r & (r - 1)) == 0:
            estimates.append(_aitken(seq))
            if len(estimates) >= 3:
                e1, e2, e3 = estimates[-3:]
                if abs(e3 - e2) <= 1e-10 * max(1.0, abs(e3)) and abs(e2 - e1) <= 1e-6 * max(1.0, abs(e3)):
                    return AsymptoteLine(M, e3)
    raise ValueError("intercept does not converge: no linear asymptote")


def build_example_omega():
    """The example function with slopes ``m_r = 2 - 2**-r`` on ``ln 2`` segments."""
    return MulhollandPiecewise(PiecewiseCharacteristic(GeometricSlopes(2.0, 1.0, 0.5)))


_OMEGA = build_example_omega()


def build_interpolation_young(p):
    """Mulholland function whose characteristic has asymptotic slope ``p - 1``.

    Slopes ``m_r = (p - 1)(1 - 2**-(r+1))`` on ``ln 2`` segments, so the
    associated F-norm has the ``p``-sum of component norms as its envelope.
    """
    if p <= 1.0:
        raise ValueError(f"p must exceed 1, got {p}")
    a = p - 1.0
    return MulhollandPiecewise(PiecewiseCharacteristic(GeometricSlopes(a, a / 2.0, 0.5)))


def asymptotic_young(line):
    """Power Young function ``e^b |x|**(M + 1)`` generated by an asymptote line."""
    if line.slope <= 0.0:
        raise ValueError("asymptote slope must be positive")
    return Power(math.exp(line.intercept), line.slope + 1.0)
