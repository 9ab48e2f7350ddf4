"""Why the naive fractional product rule fails, and what repairs it.

The RL product rule is a genuine theorem. Transplanting it to the
Caputo derivative looks plausible and is wrong whenever the lower-order
data of the factors is nonzero at the terminal; the compensation series
R1 accounts for the error exactly.
"""

from fracseries import leibniz_report, series_from_catalog


def show(f, g, label, alpha=0.5, t=2.0):
    print(f"\n{label}, alpha={alpha}, t={t}")
    for rule in ("rl", "wrong", "corrected"):
        rep = leibniz_report(f, g, alpha, t, rule=rule)
        print(
            f"  {rule:9}: value {rep.rule_value.value: .12f}  "
            f"truth {rep.reference_value.value: .12f}  "
            f"residual {rep.residual:.3e}  R1 {rep.correction_value: .12f}"
        )


def main():
    a = 1.0

    # the classic counterexample: f = t - a against a plain constant
    f = series_from_catalog("shifted-poly", [0.0, 1.0], center=a)
    g = series_from_catalog("const", [1.0], center=a)
    show(f, g, "f = t-1, g = 1")

    # both factors nonzero at the terminal
    f2 = series_from_catalog("poly", [0.0, 1.0], center=a)
    show(f2, f2, "f = g = t")

    # smooth non-polynomial factors
    f3 = series_from_catalog("exp", [1.0], center=a)
    g3 = series_from_catalog("sin", [1.0], center=a)
    show(f3, g3, "f = exp(t), g = sin(t)")

    # at integer order the compensation vanishes identically
    show(f2, f2, "f = g = t (classical order)", alpha=1.0)


if __name__ == "__main__":
    main()
