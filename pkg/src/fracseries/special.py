"""Real-argument gamma, generalized binomials, and the tail integral.

Every operator in this package divides by gamma values at negative
non-integer arguments as a matter of course, and relies on exact zeros
where a gamma pole lands in a denominator. The helpers here make both
behaviours explicit instead of leaving them to IEEE accidents.
"""

from __future__ import annotations

import math

from scipy.special import gammaincc

from .series import EvalResult

__all__ = [
    "gamma_ratio",
    "gamma_real",
    "gen_binom",
    "pochhammer",
    "recip_gamma",
    "upsilon",
]


def _check_finite(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return x


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma_real(x: float) -> EvalResult:
    """Gamma on the real line with poles as signed-infinity markers.

    The sign at the pole ``x = -m`` is the one-sided limit from the
    right, ``(-1)^m``. Arguments beyond the overflow threshold
    (~171.62) also report Infinite(+1) rather than raising.
    """
    x = _check_finite(x)
    if _is_nonpositive_integer(x):
        m = int(round(-x))
        return EvalResult.infinite(1 if m % 2 == 0 else -1)
    try:
        return EvalResult.finite(math.gamma(x))
    except OverflowError:
        return EvalResult.infinite(1)


def recip_gamma(x: float) -> float:
    """1/Gamma(x), with exact 0.0 at the poles.

    This is the form the series coefficients actually need: the term is
    dropped exactly when the denominator gamma sits on a pole.
    """
    x = _check_finite(x)
    if _is_nonpositive_integer(x):
        return 0.0
    try:
        return 1.0 / math.gamma(x)
    except OverflowError:
        return 0.0


def gen_binom(alpha: float, k: int) -> float:
    """Generalized binomial coefficient via the falling-factorial product.

    Computed as alpha(alpha-1)...(alpha-k+1)/k!, never as a ratio of
    gammas, so that a non-negative integer *alpha* with k > alpha yields
    a bitwise 0.0 (one factor is exactly alpha - alpha).
    """
    alpha = _check_finite(alpha, "alpha")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    num = 1.0
    for j in range(k):
        num *= alpha - j
    return num / math.factorial(k)


def pochhammer(x: float, k: int) -> float:
    """Rising factorial x(x+1)...(x+k-1) = Gamma(x+k)/Gamma(x).

    The product form stays finite where the gamma ratio would be a
    pole-over-pole expression (integer x <= 0 with x + k > 0).
    """
    x = _check_finite(x)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    acc = 1.0
    for j in range(k):
        acc *= x + j
    return acc


def _gamma_sign(x: float) -> float:
    # sign of gamma away from poles: alternates on the negative axis
    if x > 0:
        return 1.0
    return 1.0 if math.floor(x) % 2 == 0 else -1.0


def gamma_ratio(num: float, den: float) -> float:
    """Gamma(num)/Gamma(den); exactly 0.0 when *den* sits on a pole.

    Falls back to log space when the numerator gamma alone would
    overflow while the ratio is still representable.
    """
    if _is_nonpositive_integer(den):
        return 0.0
    if _is_nonpositive_integer(num):
        raise ValueError(f"gamma pole in the numerator at {num}")
    try:
        return math.gamma(num) / math.gamma(den)
    except OverflowError:
        sign = _gamma_sign(num) * _gamma_sign(den)
        return sign * math.exp(math.lgamma(num) - math.lgamma(den))


def upsilon(p: float, q: float) -> float:
    """Tail integral of the gamma integrand: int_q^inf tau^(p-1) e^(-tau) dtau.

    Normalized so that upsilon(p, 0) = Gamma(p). Integer p admits any
    real q through the exact finite antiderivative; non-integer p
    requires q >= 0 (negative bases have no real power).
    """
    p = _check_finite(p, "p")
    q = _check_finite(q, "q")
    if p <= 0:
        raise ValueError(f"p must be > 0, got {p}")

    if p.is_integer():
        # -d/dtau [e^-tau * sum_{i<p} (p-1)!/i! tau^i] = tau^(p-1) e^-tau
        m = int(p)
        acc = 0.0
        coeff = float(math.factorial(m - 1))
        for i in range(m):
            if i > 0:
                coeff /= i
            acc += coeff * q**i
        return math.exp(-q) * acc

    if q < 0:
        raise ValueError(
            f"q must be >= 0 for non-integer p (got p={p}, q={q})"
        )
    # regularized upper incomplete gamma, rescaled; scipy uses the
    # standard series/continued-fraction split around q ~ p
    return float(gammaincc(p, q)) * math.gamma(p)
