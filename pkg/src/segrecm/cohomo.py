"""Depth and Cohen-Macaulay classification of twisted degreewise products.

Inputs describe a module M = (R_1 shifted by a_1) # ... # (R_m shifted by
a_m) over T = R_1 # ... # R_m, each R_i Gorenstein standard graded of
dimension d_i with a-invariant alpha_i.  Graded local cohomology of M
decomposes into one summand per nonempty subset E of factors: the factors
in E contribute their top cohomology, the others contribute themselves,
and the summand is nonzero exactly when the two support rays overlap:

    max over i not in E of (-a_i)  <=  min over i in E of (alpha_i - a_i)

(the left side is -infinity when E is the full set).  The summand for E
sits in cohomological degree q(E) = sum of d_i over E minus (|E| - 1), so
depth is the least q(E) with overlap and the full set always realizes the
dimension, sum d_i - (m - 1).

Everything here stores a-invariants.  The uniform-twist criteria below
take positive 'rho' lists with rho_i = -alpha_i, the convention natural
for Cohen-Macaulay rings; keeping one stored convention and converting at
the call boundary avoids sign bugs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional

from .errors import (BadTwist, DimensionTooSmall, NotApplicable, NotPositive,
                     NotSorted, ResourceCap)

SUBSET_ENUM_LIMIT = 20


class TwistedFactor(NamedTuple):
    dim: int
    a_inv: int
    shift: int


class Witness(NamedTuple):
    """A nonvanishing cohomology summand: degree q, contributing subset,
    and the (possibly half-infinite) interval of internal degrees where
    it is nonzero.  None stands for an infinite endpoint."""

    q: int
    subset: tuple[int, ...]
    lo: Optional[int]
    hi: Optional[int]


@dataclass(frozen=True)
class DepthReport:
    dim: int
    depth: int
    is_cm: bool
    witnesses: tuple[Witness, ...]

    def __post_init__(self):
        if self.depth > self.dim:
            raise ValueError("depth cannot exceed dimension")
        if self.is_cm != (self.depth == self.dim):
            raise ValueError("is_cm must mirror depth == dim")


@dataclass(frozen=True)
class TwistInterval:
    """Set of uniform twists giving a Cohen-Macaulay module: either all
    integers or a bounded open interval with rational endpoints."""

    kind: str  # "all_integers" | "open_interval"
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ("all_integers", "open_interval"):
            raise ValueError(f"unknown interval kind {self.kind!r}")
        if self.kind == "open_interval" and not self.lo < self.hi:
            raise ValueError("open interval needs lo < hi")

    def contains(self, a):
        if self.kind == "all_integers":
            return True
        return self.lo < a < self.hi

    def integer_points(self):
        """Integers strictly inside a bounded interval; None when all."""
        if self.kind == "all_integers":
            return None
        first = math.floor(self.lo) + 1
        last = math.ceil(self.hi) - 1
        return list(range(first, last + 1))


def _as_factors(factors):
    out = []
    for f in factors:
        f = TwistedFactor(*f)
        out.append(f)
    if not out:
        raise ValueError("factor list must be nonempty")
    return out


def cohomology_support(factors):
    """Depth report for M = # of R_i(a_i) via subset support analysis.

    Requires every factor dimension >= 2; two-factor inputs with a
    dimension 1 factor are served by prop_depth_m2 instead.
    """
    fs = _as_factors(factors)
    m = len(fs)
    for idx, f in enumerate(fs, start=1):
        if f.dim < 2:
            raise DimensionTooSmall(
                f"factor {idx} has dimension {f.dim}; the support analysis "
                f"requires every dimension >= 2")
    if m > SUBSET_ENUM_LIMIT:
        raise ResourceCap(f"{m} factors exceed the subset enumeration bound "
                          f"of {SUBSET_ENUM_LIMIT}")
    witnesses = []
    for size in range(1, m + 1):
        for subset in combinations(range(1, m + 1), size):
            inside = set(subset)
            q = sum(fs[i - 1].dim for i in subset) - (size - 1)
            complement = [i for i in range(1, m + 1) if i not in inside]
            lo = max((-fs[i - 1].shift for i in complement), default=None)
            hi = min(fs[i - 1].a_inv - fs[i - 1].shift for i in subset)
            if lo is None or lo <= hi:
                witnesses.append(Witness(q, subset, lo, hi))
    witnesses.sort(key=lambda w: (w.q, w.subset))
    dim = sum(f.dim for f in fs) - (m - 1)
    depth = min(w.q for w in witnesses)
    return DepthReport(dim, depth, depth == dim, tuple(witnesses))


def prop_depth_m2(r, s, rho, sigma, a, b):
    """Depth of R(a) # S(b) for two Gorenstein factors by case analysis.

    rho and sigma are the a-invariants of R and S.  Inputs are swapped so
    that r >= s; the module is symmetric in the two factors.  This is an
    independent closed-form path, deliberately not sharing code with
    cohomology_support.
    """
    if r < s:
        r, s, rho, sigma, a, b = s, r, sigma, rho, b, a
    if s < 1:
        raise ValueError(f"dimensions must be >= 1, got {r} and {s}")
    dim = r + s - 1
    witnesses = []
    if s >= 2 or r > s:
        # support intervals valid whenever some dimension exceeds 1
        if b - a <= sigma:
            witnesses.append(Witness(s, (2,), -a, sigma - b))
        if a - b <= rho:
            witnesses.append(Witness(r, (1,), -b, rho - a))
        witnesses.append(Witness(dim, (1, 2), None, min(rho - a, sigma - b)))
        witnesses.sort(key=lambda w: (w.q, w.subset))
    if r == s == 1:
        depth = 1
    elif r == s:
        depth = r if (a - b >= -sigma or a - b <= rho) else dim
    elif s == 1:
        depth = 1 if b - a <= sigma else dim
    else:
        if b - a <= sigma:
            depth = s
        elif a - b <= rho:
            depth = r
        else:
            depth = dim
    return DepthReport(dim, depth, depth == dim, tuple(witnesses))


def _check_sorted(rhos):
    rhos = [int(x) for x in rhos]
    if not rhos:
        raise ValueError("rho list must be nonempty")
    for i in range(len(rhos) - 1):
        if rhos[i] < rhos[i + 1]:
            raise NotSorted(
                f"rho list must be non-increasing; entry {rhos[i + 1]} at "
                f"position {i + 1} exceeds {rhos[i]}")
    return rhos


def cm_uniform_twist(rhos, a):
    """Cohen-Macaulayness of the uniform twist module # R_i(-a rho_i).

    rhos are the negated a-invariants, sorted non-increasing.  The m - 1
    consecutive comparisons below are equivalent to the full subset
    criterion cm_uniform_twist_raw; the equivalence is exercised in the
    test suite.
    """
    rhos = _check_sorted(rhos)
    if a <= 0:
        return all((1 - a) * rhos[l + 1] > -a * rhos[l] for l in range(len(rhos) - 1))
    return all(a * rhos[l + 1] > (a - 1) * rhos[l] for l in range(len(rhos) - 1))


def cm_uniform_twist_raw(rhos, a):
    """Subset-enumeration form of the uniform twist criterion.

    For every proper nonempty subset E the strict inequality

        max over i not in E of (a rho_i)  >  min over i in E of ((a-1) rho_i)

    must hold; this is exactly the vanishing of the corresponding
    cohomology summand.  Exhaustive over all 2^m - 2 subsets, so the
    factor count is capped.
    """
    rhos = [int(x) for x in rhos]
    if not rhos:
        raise ValueError("rho list must be nonempty")
    m = len(rhos)
    if m > SUBSET_ENUM_LIMIT:
        raise ResourceCap(f"{m} factors exceed the subset enumeration bound "
                          f"of {SUBSET_ENUM_LIMIT}")
    for size in range(1, m):
        for subset in combinations(range(m), size):
            inside = set(subset)
            big = max(a * rhos[i] for i in range(m) if i not in inside)
            small = min((a - 1) * rhos[i] for i in subset)
            if not big > small:
                return False
    return True


def cm_chain(rhos, a):
    """Chain form of the uniform twist criterion for a outside {0, 1}.

    With C = a/(a-1) for positive a and (a-1)/a for negative a, the module
    is Cohen-Macaulay exactly when

        C^(m-1) rho_m > C^(m-2) rho_(m-1) > ... > C rho_2 > rho_1,

    evaluated in exact rational arithmetic.
    """
    if a in (0, 1):
        raise BadTwist(f"chain criterion undefined for twist a = {a}")
    rhos = _check_sorted(rhos)
    c = Fraction(a, a - 1) if a > 0 else Fraction(a - 1, a)
    values = [c ** j * rhos[j] for j in range(len(rhos))]
    # values[j] = C^j rho_(j+1); the chain says they strictly increase
    return all(values[j + 1] > values[j] for j in range(len(values) - 1))


def anticanonical_cm_m2(rho, sigma):
    """Two-factor anticanonical criterion on a-invariants rho, sigma."""
    return sigma > 2 * rho and rho > 2 * sigma


def cm_twist_interval(rhos):
    """All uniform twists a giving a Cohen-Macaulay module, as a set.

    rhos must be positive and non-increasing.  With ratio
    rho = max(rho_i / rho_(i+1)) the answer is every integer when rho = 1
    and otherwise the open interval (1/(1-rho), rho/(rho-1)).
    """
    rhos = _check_sorted(rhos)
    for i, x in enumerate(rhos):
        if x <= 0:
            raise NotPositive(f"rho entry {x} at position {i} is not positive")
    if len(rhos) == 1:
        return TwistInterval("all_integers")
    ratio = max(Fraction(rhos[i], rhos[i + 1]) for i in range(len(rhos) - 1))
    if ratio == 1:
        return TwistInterval("all_integers")
    return TwistInterval("open_interval",
                         lo=Fraction(1) / (1 - ratio),
                         hi=ratio / (ratio - 1))


def canonical_power_cm(rhos, a):
    """Cohen-Macaulayness of the a-th power of the canonical ideal.

    Only meaningful when the ratio rho exceeds 1 (the ring is not a twist
    of itself in every direction); callers with ratio 1 should consult
    cm_twist_interval directly.
    """
    interval = cm_twist_interval(rhos)
    if interval.kind == "all_integers":
        raise NotApplicable(
            "all rho entries are equal (ratio 1); every power is "
            "Cohen-Macaulay and the power criterion does not apply")
    return interval.contains(a)


def dual_shift(shifts):
    """Shift vector of the dual of a twisted product: negate every entry."""
    return [-int(x) for x in shifts]
