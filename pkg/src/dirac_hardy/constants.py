"""Closed-form constants for the weighted Dirac--Hardy family.

For dimension n >= 2 and weight exponent b the sharp constant is

    min over admissible integer modes k of (k - (n-2-b)/2)^2,

where the admissible modes are all integers except 1..n-2.  The minimum is
attained at one or two modes; it vanishes exactly when (n-2-b)/2 is itself an
admissible integer (the degenerate pairs), in which case a constrained
inequality with constant 1 takes over.  This module evaluates those formulas
exactly (rational inputs stay rational), together with the one-dimensional
weighted-derivative constant, the critical Sobolev exponents, and the
iterated-logarithm weights used by remainder-term refinements on a bounded
domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Relative slack when b arrives as a float: squared distances closer than
# this are treated as exact ties / exact degeneracy.
FLOAT_TIE_RTOL = 1e-12


def _as_exact(b):
    """Fraction when the input is exact, else None."""
    if isinstance(b, (int, Fraction)):
        return Fraction(b)
    if isinstance(b, float) and b == int(b):
        return Fraction(int(b))
    return None


def ground_state_power(n: int, b) -> float:
    """(b + 2 - n) / 2, the radial growth exponent of the minimizers."""
    return (b + 2 - n) / 2


def _excluded(n: int, k: int) -> bool:
    return 1 <= k <= n - 2


def _nearest_admissible(n: int, target) -> tuple[int, int]:
    """Admissible integers bracketing the target, skipping the excluded band."""
    lo = math.floor(target)
    hi = math.ceil(target)
    while _excluded(n, lo):
        lo -= 1
    while _excluded(n, hi):
        hi += 1
    return lo, hi


@dataclass(frozen=True)
class HardyConstantReport:
    """Sharp constant for one (n, b) pair and the modes attaining it."""

    n: int
    b: float
    ground_state_power: float
    constant: float
    argmin_modes: tuple[int, ...]
    degenerate: bool
    degenerate_mode: int | None


def hardy_constant(n: int, b) -> HardyConstantReport:
    """Sharp constant via the two nearest admissible modes.

    Accepts exact b (int or Fraction), in which case tie and degeneracy
    detection are exact; floats use a 1e-12 relative tie rule.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    exact_b = _as_exact(b)
    if exact_b is not None:
        target = Fraction(n - 2 - exact_b, 2)
        lo, hi = _nearest_admissible(n, target)
        d_lo = (target - lo) ** 2
        d_hi = (hi - target) ** 2
        if d_lo < d_hi:
            modes, const = (lo,), d_lo
        elif d_hi < d_lo:
            modes, const = (hi,), d_hi
        elif lo == hi:
            modes, const = (lo,), d_lo
        else:
            modes, const = (lo, hi), d_lo
        degenerate = const == 0
        return HardyConstantReport(
            n=n,
            b=float(exact_b),
            ground_state_power=float(-target),
            constant=float(const),
            argmin_modes=modes,
            degenerate=degenerate,
            degenerate_mode=int(target) if degenerate else None,
        )
    target = (n - 2 - b) / 2
    lo, hi = _nearest_admissible(n, target)
    d_lo = (target - lo) ** 2
    d_hi = (hi - target) ** 2
    scale = max(1.0, d_lo, d_hi)
    if abs(d_lo - d_hi) <= FLOAT_TIE_RTOL * scale and lo != hi:
        modes, const = (lo, hi), min(d_lo, d_hi)
    elif d_lo <= d_hi:
        modes, const = (lo,), d_lo
    else:
        modes, const = (hi,), d_hi
    degenerate = const <= FLOAT_TIE_RTOL * max(1.0, target * target)
    return HardyConstantReport(
        n=n,
        b=float(b),
        ground_state_power=-target,
        constant=0.0 if degenerate else const,
        argmin_modes=modes,
        degenerate=degenerate,
        degenerate_mode=int(round(target)) if degenerate else None,
    )


def mode_coefficient(n: int, b, k: int) -> float:
    """(k + (b+2-n)/2)^2, the weight of mode k in the energy lower bound."""
    if _excluded(n, k):
        raise ValueError(f"mode {k} lies in the excluded band 1..{n - 2}")
    exact_b = _as_exact(b)
    if exact_b is not None:
        return float((k + Fraction(exact_b + 2 - n, 2)) ** 2)
    return (k + ground_state_power(n, b)) ** 2


def ckn_constant(n: int, a) -> float:
    """((a + n - 2)/2)^2: sharp constant of the weighted-gradient inequality.

    The one-dimensional case ckn_constant(1, n-1-b) is the radial ingredient
    of the mode-by-mode reduction.
    """
    exact_a = _as_exact(a)
    if exact_a is not None:
        return float(Fraction(exact_a + n - 2, 2) ** 2)
    return ((a + n - 2) / 2) ** 2


def constrained_constant(n: int, b) -> float:
    """Sharp constant 1 on the complement of the degenerate mode.

    Only defined for degenerate (n, b).  The value is computed as the minimum
    of (k - j)^2 over admissible k != j; a result other than 1 would indicate
    an internal error and raises.
    """
    rep = hardy_constant(n, b)
    if not rep.degenerate:
        raise ValueError(f"(n={n}, b={b}) is not a degenerate pair")
    j = rep.degenerate_mode
    best = None
    for k in range(j - n - 2, j + n + 3):
        if k == j or _excluded(n, k):
            continue
        d = (k - j) ** 2
        best = d if best is None else min(best, d)
    if best != 1:
        raise AssertionError(f"constrained constant computed as {best}, expected 1")
    return float(best)


@dataclass(frozen=True)
class SobolevHypothesis:
    """Both readings of the hypothesis on (n-2-b)/2 for the critical imbedding.

    ``passes`` excludes integer targets outside 0..n-2 (the stated set);
    ``passes_without_zero`` also rejects target 0, matching the admissible
    band of the unconstrained inequality.
    """

    target: float
    passes: bool
    passes_without_zero: bool


def sobolev_exponents(n: int, b) -> tuple[float, float]:
    """The critical exponent 2n/(n-2) and the matching weight power bn/(n-2)."""
    if n <= 2:
        raise ValueError(f"critical exponents need n > 2, got {n}")
    return 2.0 * n / (n - 2), b * n / (n - 2)


def sobolev_hypothesis(n: int, b) -> SobolevHypothesis:
    if n <= 2:
        raise ValueError(f"critical exponents need n > 2, got {n}")
    exact_b = _as_exact(b)
    if exact_b is not None:
        target = Fraction(n - 2 - exact_b, 2)
        is_int = target.denominator == 1
        t = int(target) if is_int else None
    else:
        target = (n - 2 - b) / 2
        is_int = abs(target - round(target)) <= FLOAT_TIE_RTOL * max(1.0, abs(target))
        t = int(round(target)) if is_int else None
    if not is_int:
        return SobolevHypothesis(float(target), True, True)
    inside = 0 <= t <= n - 2
    inside_without_zero = 1 <= t <= n - 2
    return SobolevHypothesis(float(target), inside, inside_without_zero)


# ---------------------------------------------------------------------------
# Iterated-logarithm weights for remainder series on a bounded domain.


def iterated_log(j: int, r: float, R: float) -> float | None:
    """j-fold composition of r -> log(R/r), with explicit domain tracking.

    Defined for 0 < r < R.  Returns None (undefined, not an error) as soon as
    an intermediate value leaves the open interval (0, R).
    """
    if j < 1:
        raise ValueError("composition depth must be >= 1")
    if not (0.0 < r < R):
        raise ValueError(f"radius must lie in (0, {R}), got {r}")
    value = math.log(R / r)
    for _ in range(j - 1):
        if not (0.0 < value < R):
            return None
        value = math.log(R / value)
    return value


def _all_defined(r: float, R: float, levels: int) -> bool:
    try:
        return iterated_log(levels, r, R) is not None
    except ValueError:
        return False


VARIANTS = ("literal", "inverse-square")


@dataclass(frozen=True)
class RemainderWeights:
    """Iterated-log weight family on a domain of outer radius R.

    ``variant`` selects between the two series shapes in circulation: the
    plain product of iterated logs ("literal") and the product of their
    inverse squares ("inverse-square").  Neither is asserted to dominate the
    other; both are evaluated and compared numerically downstream.
    ``valid_interval`` is the open sub-interval of (0, R) on which all K
    compositions are defined; it shrinks weakly as K grows.
    """

    R: float
    K: int
    variant: str
    valid_interval: tuple[float, float]


def remainder_weights(R: float, K: int, variant: str = "inverse-square") -> RemainderWeights:
    if R <= 0:
        raise ValueError("domain radius must be positive")
    if K < 0:
        raise ValueError("truncation level must be >= 0")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if K <= 1:
        return RemainderWeights(R=R, K=K, variant=variant, valid_interval=(0.0, R))
    # Scan a geometric grid for the defined region, then refine by bisection.
    samples = [R * math.exp(t) for t in _log_grid(4096)]
    flags = [_all_defined(r, R, K) for r in samples]
    if not any(flags):
        raise ValueError(f"no radius admits {K} composition levels for R={R}")
    first = flags.index(True)
    last = len(flags) - 1 - flags[::-1].index(True)
    lo = _bisect_edge(samples[first - 1] if first > 0 else samples[0] * 0.5, samples[first], R, K)
    hi_seed = samples[last + 1] if last + 1 < len(samples) else R * (1.0 - 1e-15)
    hi = _bisect_edge(hi_seed, samples[last], R, K)
    return RemainderWeights(R=R, K=K, variant=variant, valid_interval=(lo, hi))


def _log_grid(count: int) -> list[float]:
    # log-radii between R*exp(-40) and R*(1 - 1e-12)
    lo, hi = -40.0, math.log1p(-1e-12)
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def _bisect_edge(outside: float, inside: float, R: float, K: int) -> float:
    """Refine the boundary of the defined region between two radii."""
    for _ in range(200):
        mid = 0.5 * (outside + inside)
        if mid == outside or mid == inside:
            break
        if _all_defined(mid, R, K):
            inside = mid
        else:
            outside = mid
    return inside


def remainder_weight(r: float, K: int, weights: RemainderWeights, b, c_b: float) -> float:
    """Truncated remainder weight at radius r.

    literal:        c_b * r^-2 * sum_{k<=K} prod_{j<=k} eta_j(r)
    inverse-square: c_b * r^-2 * sum_{k<=K} prod_{j<=k} eta_j(r)^-2

    The printed weights do not involve b; the argument is accepted for
    interface parity with the leading term c_b * r^(-b-2).
    """
    del b
    if K > weights.K:
        raise ValueError(f"requested level {K} exceeds the prepared level {weights.K}")
    lo, hi = weights.valid_interval
    if not (lo < r < hi):
        raise ValueError(f"radius {r} outside the valid interval ({lo}, {hi})")
    if K == 0:
        return 0.0
    total = 0.0
    product = 1.0
    value = math.log(weights.R / r)
    for level in range(1, K + 1):
        product *= value
        if weights.variant == "literal":
            total += product
        else:
            total += product**-2
        if level < K:
            value = math.log(weights.R / value)
    return c_b * total / r**2
