"""Norms on a small discrete measure and the Banach-envelope limit.

Run with ``python3 demos/orlicz_and_envelope.py``.
"""

from mulholland import (DiscreteMeasure, L1Polygon, SampledFunction, build_example_omega,
                        envelope_ratio, eta_concat, luxemburg_norm, maximal_subspace_ratio,
                        ngamma_norm, orlicz_norm)


def main():
    omega = build_example_omega()
    mu = DiscreteMeasure((0.5, 1.0, 2.0))
    f = SampledFunction((1.0, -3.0, 0.25))
    g = SampledFunction((0.0, 2.0, 5.0))
    lux, orl = luxemburg_norm(omega, f, mu), orlicz_norm(omega, f, mu)
    print(f"Luxemburg {lux:.12g} <= Orlicz {orl:.12g} <= 2 x Luxemburg {2 * lux:.12g}")

    pair = ngamma_norm(L1Polygon(), omega, f, g, mu)
    fg, mu2 = eta_concat(f, g, mu)
    print(f"N_Gamma of (f, g) {pair:.12g} equals Luxemburg of the concatenation "
          f"{luxemburg_norm(omega, fg, mu2):.12g}")

    print("\nScaled F-norm against the cubic envelope, direction (1, 1):")
    for k in (10.0, 1e2, 1e4, 1e6):
        print(f"  k={k:g}: ratio {envelope_ratio(omega, k, [1.0, 1.0]):.10f}")
    print(f"Inner F-norm on the diagonal subspace at scale 1e4: "
          f"{maximal_subspace_ratio(omega, 1e4, 1.0, 1.0):.6f} (sqrt 2 = 1.414214)")


if __name__ == "__main__":
    main()
