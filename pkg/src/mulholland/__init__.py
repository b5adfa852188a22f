"""Young functions of Mulholland type and the spaces they norm.

Modules
-------
youngfn   Young functions, inverses, conjugates, growth checks.
fnorm     F-norms and metrics on finite direct sums.
envelope  Banach-envelope p-sum norms and their diagnostics.
dirlimit  Direct-limit F-norm on finitely supported sequences.
orlicz    Luxemburg, Orlicz and N_Gamma norms on discrete measures.
"""

from .dirlimit import (FiniteSequence, YoungLadder, constant_ladder, default_ladder,
                       direct_limit_norm, limit_local_boundedness_probe)
from .envelope import (EnvelopeNorm, envelope_exponent, envelope_hull_check, envelope_norm,
                       envelope_ratio, maximal_subspace_ratio)
from .fnorm import DirectSumPoint, NormedComponent, dist, fnorm, verify_mulholland_inequality
from .orlicz import (DiscreteMeasure, L1Polygon, SampledFunction, SupportPolygon, eta_concat,
                     luxemburg_norm, ngamma_norm, orlicz_norm)
from .youngfn import (AnalyticCharacteristic, ConjugateYoung, GeometricSlopes, ListSlopes,
                      MulhollandPiecewise, PiecewiseCharacteristic, Power, build_example_omega,
                      build_interpolation_young, check_delta2, check_mulholland,
                      conjugate_closed_form_omega, conjugate_numeric, eval_young, inverse_young)

__version__ = "0.1.0"

__all__ = [
    "FiniteSequence", "YoungLadder", "constant_ladder", "default_ladder", "direct_limit_norm",
    "limit_local_boundedness_probe", "EnvelopeNorm", "envelope_exponent", "envelope_hull_check",
    "envelope_norm", "envelope_ratio", "maximal_subspace_ratio", "DirectSumPoint",
    "NormedComponent", "dist", "fnorm", "verify_mulholland_inequality", "DiscreteMeasure",
    "L1Polygon", "SampledFunction", "SupportPolygon", "eta_concat", "luxemburg_norm",
    "ngamma_norm", "orlicz_norm", "AnalyticCharacteristic", "ConjugateYoung", "GeometricSlopes",
    "ListSlopes", "MulhollandPiecewise", "PiecewiseCharacteristic", "Power",
    "build_example_omega", "build_interpolation_young", "check_delta2", "check_mulholland",
    "conjugate_closed_form_omega", "conjugate_numeric", "eval_young", "inverse_young",
]
