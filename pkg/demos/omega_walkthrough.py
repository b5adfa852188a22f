"""Walk through the example Young function Omega and its conjugate.

Run with ``python3 demos/omega_walkthrough.py``.
"""

import numpy as np

from mulholland import (ConjugateYoung, build_example_omega, check_delta2, check_mulholland,
                        conjugate_closed_form_omega, conjugate_numeric, fnorm, inverse_young)


def main():
    omega = build_example_omega()
    print("Omega is t^2 up to 2, then grows with slopes creeping toward 3 in log-log scale.")
    for t in (0.5, 2.0, 10.0, 1e3, 1e6):
        print(f"  Omega({t:g}) = {omega(t):.10g}   inverse round trip "
              f"{inverse_young(omega, omega(t)):.10g}")

    print("\nThe conjugate by two routes (numeric maximisation and segment formula):")
    for t in (1.0, 1e2, 1e4):
        print(f"  t={t:g}: numeric {conjugate_numeric(omega, t):.12g}, "
              f"closed {conjugate_closed_form_omega(t):.12g}")

    rep = check_delta2(omega, 1.0, 1e9, 2000)
    print(f"\nDelta2 on [1, 1e9]: satisfied={rep.satisfied}, sup ratio {rep.constant:.6f}")
    theta = check_delta2(ConjugateYoung(omega, "closed"), 1.0, 1e9, 2000)
    print("Conjugate ratio Theta(2t)/Theta(t) steps down through plateaus:")
    for t in (1e1, 1e2, 1e3, 1e4, 1e6, 1e9):
        i = int(np.searchsorted(theta.grid, t))
        i = min(i, theta.grid.size - 1)
        print(f"  t~{theta.grid[i]:.3g}: {theta.ratios[i]:.6f}")

    mh = check_mulholland(omega, -20.0, 20.0, 2000)
    print(f"\nlog Omega(e^s) convex on [-20, 20]: {mh.satisfied}")
    print(f"F-norm of (1, 1) is sqrt(2) here: {fnorm(omega, [1.0, 1.0]):.15g}")


if __name__ == "__main__":
    main()
