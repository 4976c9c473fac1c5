"""Asymptotic growth formulas and empirical singularity estimation.

The exact coefficient sequences produced by the enumeration modules have
algebraic (square-root) dominant singularities, so counts grow like
amplitude * n^exponent * rho^(-n) with rho the radius of convergence.
This module evaluates the growth formulas for both tree families in high
precision and, independently, re-estimates (rho, amplitude, exponent)
from exact coefficients by ratio extrapolation.

Quoted reference constants for the unlabeled gall-free class are
gamma = 1.13000 and rho = 0.4027 (stored verbatim; they are truncated,
so diagnostics always report the re-estimated values next to them).  In
the labeled case the corresponding constants are exact: gamma = 1,
rho = 1/2.

Precision: all floating evaluation runs at GALLEON_PRECISION significant
digits (environment variable, default 50).  Hardware floats would
overflow around n = 150 for the labeled formulas, which contain n!.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import mpmath as mp

from .labeled import double_factorial


def precision_digits() -> int:
    """Working precision in significant digits (env GALLEON_PRECISION)."""
    return int(os.environ.get("GALLEON_PRECISION", "50"))


@dataclass(frozen=True)
class AsymptoticParams:
    """Constants entering the unlabeled growth formulas.

    source is "quoted" for the verbatim reference values and "estimated"
    for constants re-derived from exact coefficients.
    """

    gamma: object
    rho: object
    source: str


QUOTED_UNLABELED = AsymptoticParams(gamma="1.13000", rho="0.4027", source="quoted")


@dataclass
class SingularityEstimate:
    """Empirical singularity data fitted from exact coefficients."""

    rho_hat: float
    gamma_hat: float
    exponent_hat: float
    order_used: int


def _neville_limit(ns, vals, points=12):
    """Extrapolate vals ~ L + a1/n + a2/n^2 + ... to n = infinity.

    Polynomial (Neville) extrapolation in the variable 1/n over the last
    ``points`` entries.  The inputs are exact-ratio data, so there is no
    noise floor to worry about and a dozen points give the limit to many
    digits.
    """
    ns = ns[-points:]
    vals = list(vals[-points:])
    xs = [mp.mpf(1) / n for n in ns]
    m = len(vals)
    for k in range(1, m):
        for i in range(m - 1, k - 1, -1):
            vals[i] = vals[i] + (vals[i] - vals[i - 1]) * xs[i] / (xs[i - k] - xs[i])
    return vals[m - 1]


def _to_mpf(value):
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / mp.mpf(value.denominator)
    return mp.mpf(value)


def estimate_singularity(
    counts, model_exponent, amplitude_scale=1, points=12
) -> SingularityEstimate:
    """Fit rho, amplitude and exponent from a vector of exact coefficients.

    ``counts[n]`` is the coefficient of t^n (ints or Fractions; leading
    zeros allowed).  Requires at least 50 terms.  rho_hat comes from
    extrapolated consecutive ratios c_(n-1)/c_n; exponent_hat from a
    log-log regression of c_n rho_hat^n against n; gamma_hat by matching
    the leading amplitude under the supplied model exponent, scaled by
    ``amplitude_scale`` (2 sqrt(pi) turns the gall-free amplitude into the
    conventional gamma normalization).
    """
    if len(counts) < 50:
        raise ValueError("need at least 50 coefficients, got %d" % len(counts))
    with mp.workdps(precision_digits()):
        ns = [
            n
            for n in range(1, len(counts))
            if counts[n - 1] != 0 and counts[n] != 0
        ]
        if len(ns) < 25:
            raise ValueError("too few consecutive nonzero coefficients")
        ratios = []
        for n in ns:
            q = Fraction(counts[n - 1]) / Fraction(counts[n])
            ratios.append(mp.mpf(q.numerator) / mp.mpf(q.denominator))
        rho = _neville_limit(ns, ratios, points)

        theta = _to_mpf(model_exponent)
        amp_ns = ns[-min(len(ns), 100):]
        amps = [
            _to_mpf(counts[n]) * mp.power(n, -theta) * mp.power(rho, n) for n in amp_ns
        ]
        gamma = _to_mpf(amplitude_scale) * _neville_limit(amp_ns, amps, points)

        reg_ns = ns[-min(len(ns), 40):]
        xs = [mp.log(n) for n in reg_ns]
        ys = [mp.log(_to_mpf(counts[n])) + n * mp.log(rho) for n in reg_ns]
        k = len(xs)
        sx = mp.fsum(xs)
        sy = mp.fsum(ys)
        sxx = mp.fsum(x * x for x in xs)
        sxy = mp.fsum(x * y for x, y in zip(xs, ys))
        slope = (k * sxy - sx * sy) / (k * sxx - sx * sx)

        return SingularityEstimate(
            rho_hat=float(rho),
            gamma_hat=float(gamma),
            exponent_hat=float(slope),
            order_used=len(counts) - 1,
        )


def estimated_unlabeled_params(order: int = 200) -> AsymptoticParams:
    """Re-estimate (gamma, rho) from ``order`` exact gall-free coefficients."""
    from .series import ogf_to_counts
    from .unlabeled import unlabeled_gf

    counts = ogf_to_counts(unlabeled_gf("U", order))
    est = estimate_singularity(
        counts, Fraction(-3, 2), amplitude_scale=2 * mp.sqrt(mp.pi)
    )
    return AsymptoticParams(gamma=est.gamma_hat, rho=est.rho_hat, source="estimated")


def asym_unlabeled(n: int, g: int, params: AsymptoticParams = QUOTED_UNLABELED):
    """Growth approximation for unlabeled counts at (n, g).

    g = 0:   gamma / (2 sqrt(pi)) * n^(-3/2) * rho^(-n)
    g >= 1:  2^(2g-1) / ((2g)! gamma^(4g-1) sqrt(pi)) * n^(2g-3/2) * rho^(-n)

    The g >= 1 family specializes to the dedicated one- and two-gall
    formulas (prefactors 1/(gamma^3 sqrt(pi)) and 1/(3 gamma^7 sqrt(pi))).
    """
    if g < 0:
        raise ValueError("gall count must be nonnegative")
    with mp.workdps(precision_digits()):
        gamma = _to_mpf(params.gamma)
        rho = _to_mpf(params.rho)
        if g == 0:
            return (
                gamma
                / (2 * mp.sqrt(mp.pi))
                * mp.power(n, mp.mpf(-3) / 2)
                * mp.power(rho, -n)
            )
        return (
            mp.power(2, 2 * g - 1)
            / (mp.factorial(2 * g) * mp.power(gamma, 4 * g - 1) * mp.sqrt(mp.pi))
            * mp.power(n, 2 * g - mp.mpf(3) / 2)
            * mp.power(rho, -n)
        )


def asym_labeled(n: int, g: int):
    """Growth approximation for labeled counts at (n, g), factorial form:

        2^(2g-1) / ((2g)! sqrt(pi)) * n^(2g-3/2) * 2^n * n!

    For g = 0 this is the familiar n^(-3/2)/(2 sqrt(pi)) * 2^n * n! growth
    of the (2n-3)!! labeled topologies.
    """
    if g < 0:
        raise ValueError("gall count must be nonnegative")
    with mp.workdps(precision_digits()):
        return (
            mp.power(2, 2 * g - 1)
            / (mp.factorial(2 * g) * mp.sqrt(mp.pi))
            * mp.power(n, 2 * g - mp.mpf(3) / 2)
            * mp.power(2, n)
            * mp.factorial(n)
        )


def asym_labeled_stirling(n: int, g: int):
    """Stirling form of :func:`asym_labeled`:

        2^(2g-1) sqrt(2) / (2g)! * (2/e)^n * n^(n+2g-1)
    """
    if g < 0:
        raise ValueError("gall count must be nonnegative")
    with mp.workdps(precision_digits()):
        return (
            mp.power(2, 2 * g - 1)
            * mp.sqrt(2)
            / mp.factorial(2 * g)
            * mp.power(mp.mpf(2) / mp.e, n)
            * mp.power(n, n + 2 * g - 1)
        )


def catalan(m: int) -> int:
    """The m-th Catalan number binom(2m, m) / (m + 1)."""
    return comb(2 * m, m) // (m + 1)


def class_ratio(k: int) -> Fraction:
    """Exact size ratio against the broader network classes at k reticulations.

    For k >= 2 the labeled galled trees here grow more slowly than general
    phylogenetic networks (and the tree-child, normal, galled and
    reticulation-visible families, which all share one asymptotic form) by

        (2^(2k-1) sqrt(2)/(2k)!) / (2^(k-1) sqrt(2)/k!) = 2^k k! / (2k)!

    which collapses to 1/(2k-1)!!.  Returns the exact rational and checks
    the collapse identity.
    """
    if k < 0:
        raise ValueError("reticulation count must be nonnegative")
    ratio = Fraction(2**k * factorial(k), factorial(2 * k))
    identity = Fraction(1, double_factorial(2 * k - 1))
    if ratio != identity:
        raise AssertionError(
            "ratio identity failed at k=%d: %s vs %s" % (k, ratio, identity)
        )
    return ratio
