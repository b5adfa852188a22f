"""Scalar root-finding and line-search helpers shared by every module."""

import math

from scipy.optimize import brentq

MAX_ITER = 10_000
GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class ConvergenceError(RuntimeError):
    """A solver hit its iteration cap or could not bracket a root."""


def bracket_increasing(func, target, lo=0.0, hi=1.0, limit=math.inf):
    """Grow ``hi`` by doubling until ``func(hi) >= target``.

    ``func`` must be non-decreasing on ``[lo, inf)``.
    """
    n = 0
    while func(hi) < target:
        lo, hi = hi, 2.0 * hi
        n += 1
        if hi > limit or math.isinf(hi) or n > MAX_ITER:
            raise ConvergenceError(
                f"could not bracket target {target!r}; last upper end {hi!r}")
    return lo, hi


def solve_increasing(func, target, lo=0.0, hi=1.0, full_output=False):
    """Return ``x >= lo`` with ``func(x) == target`` for a non-decreasing ``func``.

    The bracket is expanded by doubling from ``[lo, hi]`` and the root is
    then located with Brent's method (bisection safeguarded by secant and
    inverse quadratic steps) to full double precision. With
    ``full_output=True`` a ``(root, info)`` pair is returned where ``info``
    holds the final bracket and the iteration counts.
    """
    info = {"bracket": [lo, hi], "doublings": 0, "iterations": 0}
    if func(lo) >= target:
        return (lo, info) if full_output else lo
    a, b = bracket_increasing(func, target, lo, hi)
    info["bracket"] = [a, b]
    info["doublings"] = max(0, round(math.log2(b / hi))) if hi > 0 and b > 0 else 0
    if func(b) == target:
        return (b, info) if full_output else b
    try:
        root, res = brentq(lambda x: func(x) - target, a, b,
                           xtol=1e-300, rtol=8.9e-16, maxiter=MAX_ITER, full_output=True)
    except RuntimeError as exc:
        raise ConvergenceError(str(exc)) from exc
    if not res.converged:
        raise ConvergenceError(res.flag)
    info["iterations"] = res.iterations
    return (root, info) if full_output else root


def bisect_decreasing(pred, lo, hi, rtol=1e-15, max_iter=MAX_ITER):
    """Smallest ``x`` in ``[lo, hi]`` where the monotone predicate becomes true.

    ``pred`` is False on ``[lo, x*)`` and True on ``[x*, hi]``. Bisection is
    carried out geometrically when both ends are positive.
    """
    for _ in range(max_iter):
        if hi - lo <= rtol * hi:
            return hi
        mid = math.sqrt(lo * hi) if lo > 0.0 and hi / lo > 4.0 else 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return hi
        if pred(mid):
            hi = mid
        else:
            lo = mid
    raise ConvergenceError("bisection did not converge")


def golden_section_max(func, a, b, tol=1e-15, max_iter=500):
    """Maximise a unimodal ``func`` on ``[a, b]``; returns ``(x, func(x))``."""
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = func(c), func(d)
    for _ in range(max_iter):
        if abs(b - a) <= tol * max(1.0, abs(a) + abs(b)):
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = func(d)
    best = max((fc, c), (fd, d), (func(a), a), (func(b), b))
    return best[1], best[0]
