"""Walk through the series form of the fractional operators.

Build Taylor data for a few functions, apply the memory integral and
both derivative definitions, and evaluate the resulting power series,
including the behaviour right at the lower terminal.
"""

import math

from fracseries import (
    caputo_derivative,
    classify_lower_terminal,
    rl_caputo_bridge,
    rl_differintegral,
    series_from_catalog,
)


def main():
    a = 1.0
    alpha = 0.5
    f = series_from_catalog("shifted-poly", [0.0, 1.0], center=a)  # t - a

    print(f"f = t - {a},  alpha = {alpha}\n")

    cap = caputo_derivative(f, alpha)
    print("Caputo derivative series terms:", cap.terms)
    for t in (1.25, 1.5, 2.0, 3.0):
        got = cap.evaluate(t).expect_finite()
        ref = (t - a) ** (1 - alpha) / math.gamma(2 - alpha)
        print(f"  t={t:4}: {got:.15f}  (closed form {ref:.15f})")

    rl = rl_differintegral(f, alpha)
    print("\nRL derivative adds the lower-terminal term:", rl.terms)
    print("RL at the terminal itself:", rl.evaluate(a))

    bridge = rl_caputo_bridge(f, alpha)
    t = 2.0
    print(
        "\nbridge identity at t=2:",
        rl.evaluate(t).expect_finite(),
        "=",
        cap.evaluate(t).expect_finite(),
        "+",
        bridge.evaluate(t).expect_finite(),
    )

    print("\nlower-terminal classification:")
    g = series_from_catalog("exp", [1.0], center=0.0)
    for order in (-0.5, 0.0, 0.5, 1.5):
        print(f"  exp(t), order {order:4}: {classify_lower_terminal(g, order)}")

    print("\ninteger orders collapse to classical calculus:")
    h = series_from_catalog("poly", [0.0, 0.0, 1.0], center=0.0)  # t^2
    print("  D^1 t^2 terms:", rl_differintegral(h, 1.0).terms)
    print("  I^1 t^2 terms:", rl_differintegral(h, -1.0).terms)


if __name__ == "__main__":
    main()
