"""Direct-limit F-norm on finitely supported sequences.

The norm is built one coordinate at a time from a ladder of Young functions
``Omega_1, Omega_2, ...``:

    ||(a_1)||            = |a_1|
    ||(a_1, ..., a_k)||  = Omega_{k-1}^{-1}(Omega_{k-1}(||(a_1, ..., a_{k-1})||)
                                            + Omega_{k-1}(|a_k|))

so the first two coordinates are combined with ``Omega_1``.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from .fnorm import fnorm
from .youngfn import build_interpolation_young

__all__ = [
    "YoungLadder",
    "default_ladder",
    "constant_ladder",
    "FiniteSequence",
    "direct_limit_norm",
    "LimitBoundednessReport",
    "limit_local_boundedness_probe",
]


class YoungLadder:
    """Deterministic rule ``r -> Omega_r`` (``r >= 1``), memoised per level."""

    def __init__(self, generator, name="custom"):
        self.name = name
        self._level = lru_cache(maxsize=None)(generator)

    def __getitem__(self, r):
        if r < 1:
            raise IndexError("ladder levels start at 1")
        return self._level(r)

    def __repr__(self):
        return f"YoungLadder({self.name!r})"


def default_ladder():
    """Levels ``build_interpolation_young(2 + r/(r+1))``: asymptotic slopes ``1 + r/(r+1)``."""
    return YoungLadder(lambda r: build_interpolation_young(2.0 + r / (r + 1.0)),
                       name="interpolation")


def constant_ladder(phi):
    """Every level equal to ``phi``."""
    return YoungLadder(lambda r: phi, name="constant")


@dataclass(frozen=True)
class FiniteSequence:
    """A finitely supported real sequence; trailing zeros allowed."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(float(a) for a in self.entries))

    @property
    def stabilization_index(self):
        """Position (1-based) of the last non-zero entry; 0 for the zero sequence."""
        nz = [i for i, a in enumerate(self.entries) if a != 0.0]
        return nz[-1] + 1 if nz else 0

    def padded(self, n_zeros=1):
        return FiniteSequence(self.entries + (0.0,) * n_zeros)

    def __len__(self):
        return len(self.entries)


def direct_limit_norm(ladder, a):
    """Inductive F-norm of a finitely supported sequence (see module docstring)."""
    entries = a.entries if isinstance(a, FiniteSequence) else tuple(float(v) for v in a)
    if not entries:
        return 0.0
    acc = abs(entries[0])
    for k, ak in enumerate(entries[1:], start=2):
        acc = fnorm(ladder[k - 1], [acc, abs(ak)])
    return acc


@dataclass(frozen=True)
class LimitBoundednessReport:
    """Minimal scaling ``s`` with ``B_1`` inside ``s B_{r_o}``, per radius."""

    bounds: dict
    all_finite: bool
    samples: int


def _scale_to(ladder, entries, level):
    """Smallest ``s > 0`` with ``||entries / s|| <= level``.

    ``s -> ||entries / s||`` is continuous and strictly decreasing, so the
    root is bracketed in ``log s`` and found with Brent's method.
    """
    n = direct_limit_norm(ladder, entries)
    if n == 0.0:
        return 0.0

    def excess(log_s):
        s = math.exp(log_s)
        return direct_limit_norm(ladder, [v / s for v in entries]) - level

    lo = hi = math.log(n / level)
    while excess(lo) <= 0.0:
        lo -= 1.0
    while excess(hi) > 0.0:
        hi += 1.0
    return math.exp(brentq(excess, lo, hi, xtol=1e-14, rtol=1e-14))


def limit_local_boundedness_probe(ladder, samples, radii=(0.25, 0.5), max_support=16, seed=0):
    """Sample sequences in the open unit ball and find how far each must be shrunk.

    Each sample has a random support length (at most ``max_support``) and
    random entries, rescaled into the open unit ball. For every radius
    ``r_o`` the report holds the largest minimal ``s`` with
    ``||a / s|| <= r_o`` over the sample.
    """
    rng = np.random.default_rng(seed)
    bounds = {float(r): 0.0 for r in radii}
    for _ in range(samples):
        n = int(rng.integers(1, max_support + 1))
        raw = list(rng.standard_normal(n) * np.exp(rng.uniform(-3.0, 3.0, n)))
        target = rng.uniform(0.0, 1.0)
        norm = direct_limit_norm(ladder, raw)
        if norm == 0.0:
            continue
        # shrink until the sample sits inside the unit ball
        c = _scale_to(ladder, raw, target)
        entries = [v / c for v in raw]
        if direct_limit_norm(ladder, entries) >= 1.0:
            continue
        for r in bounds:
            bounds[r] = max(bounds[r], _scale_to(ladder, entries, r))
    return LimitBoundednessReport(bounds, all(math.isfinite(v) for v in bounds.values()), samples)
