"""Asymptotic coefficient calculators for minimum-size maximal K-antichains.

These are the leading-order formulas: everything here is about the n^2
coefficient, with the o(n^2) terms deliberately out of scope.  Coefficient
functions of the largest level l are exact rationals; the density-domain
bounds for K = {2,4} (removal-type bound 4*gamma/5, the triangle-count
lower bound, and the bound derived from it) are floats, gamma being the
edge density |E|/n^2 with 0 <= gamma < 1/2.

The two {2,4} bounds cross at gamma = (39 + sqrt(21))/150, giving the
proven coefficient 2*(39 + sqrt(21))/375 < 0.232441 for the maximum of
|E| - |C_4|, and (219 - 4*sqrt(21))/750 for the antichain-size lower
bound; the two constants sum to 1/2 exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _check_gamma(gamma: float, hi: float = 0.5) -> None:
    if not 0.0 <= gamma < hi:
        raise ValueError(f"edge density gamma={gamma} outside [0, {hi})")


def objective_coeff(l: int) -> Fraction:
    """Leading coefficient of max |E| - sum of clique slices, largest level l:
    (floor(l/2)*ceil(l/2) - 1) / (4*floor(l/2)*ceil(l/2)).
    """
    if l < 3:
        raise ValueError("need l >= 3")
    fc = (l // 2) * ((l + 1) // 2)
    return Fraction(fc - 1, 4 * fc)


def antichain_coeff(l: int) -> Fraction:
    """Leading coefficient of the minimum antichain size, largest level l:
    (floor(l/2)*ceil(l/2) + 1) / (4*floor(l/2)*ceil(l/2)).
    """
    if l < 3:
        raise ValueError("need l >= 3")
    fc = (l // 2) * ((l + 1) // 2)
    return Fraction(fc + 1, 4 * fc)


def first_bound(gamma: float) -> float:
    """Removal-type bound for {2,4}: objective coefficient at most 4*gamma/5."""
    _check_gamma(gamma)
    return 4.0 * gamma / 5.0


def triangle_lower(gamma: float) -> float:
    """Minimum triangle density (per n^3) of a graph with edge density gamma:
    (9*gamma - 2 - 2*(1-3*gamma)^(3/2)) / 27, clamped below at zero.

    The radical is real for gamma <= 1/3; above that the radicand is
    clamped to zero, which keeps the expression a valid lower bound.
    """
    _check_gamma(gamma)
    rad = max(0.0, 1.0 - 3.0 * gamma)
    return max(0.0, (9.0 * gamma - 2.0 - 2.0 * rad ** 1.5) / 27.0)


def second_bound(gamma: float) -> float:
    """Triangle-derived bound for {2,4}: objective coefficient at most
    (2 + 2*(1-3*gamma)^(3/2)) / 9, meaningful on gamma in [1/4, 1/3].
    """
    if not 0.0 <= gamma <= 1.0 / 3.0 + 1e-15:
        raise ValueError(f"gamma={gamma} outside [0, 1/3]")
    rad = max(0.0, 1.0 - 3.0 * gamma)
    return (2.0 + 2.0 * rad ** 1.5) / 9.0


def critical_density(tol: float = 1e-14) -> float:
    """The density where the two {2,4} bounds cross, found by bisection on
    [1/4, 1/3]; agrees with the closed form (39 + sqrt(21))/150 to 1e-12.
    """
    lo, hi = 0.25, 1.0 / 3.0
    # first_bound - second_bound is increasing and negative at lo, positive at hi
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if first_bound(mid) - second_bound(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def upper_bound_constant() -> float:
    """Proven coefficient bound for max |E| - |C_4| over {2,4}-saturated
    graphs: 2*(39 + sqrt(21))/375, just below 0.232441.
    """
    return 2.0 * (39.0 + math.sqrt(21.0)) / 375.0


def antichain_lower_coeff() -> float:
    """Proven lower-bound coefficient for the minimum size of a maximal
    {2,4}-antichain: (219 - 4*sqrt(21))/750 = 1/2 - upper_bound_constant().
    """
    return (219.0 - 4.0 * math.sqrt(21.0)) / 750.0


def triangle_cap(n: int, c4_count: int) -> float:
    """Leading term of the triangle upper bound in a {2,4}-saturated graph:
    (n - 4) * |C_4| / 3.  The o(n^3) correction is real and matters at
    small n, so this is not a finite-n inequality.
    """
    if n < 5:
        raise ValueError("need n >= 5")
    if c4_count < 0:
        raise ValueError("clique count must be nonnegative")
    return (n - 4) * c4_count / 3.0
