"""Exact Hilbert series arithmetic.

A series is stored as an integer Laurent polynomial numerator over a
denominator (1 - t)^d.  Negative numerator exponents encode degree
shifts; d = 0 means the series is the numerator polynomial itself.
Everything is integer arithmetic, so coefficient extraction is exact at
every degree.

The one nontrivial operation is the coefficientwise (Hadamard) product,
which is what the degreewise tensor construction does to Hilbert series:
it is computed by expanding both factors far enough, multiplying the
coefficient streams, and reconstructing the unique numerator over
(1 - t)^(d1 + d2 - 1).  A guard band of extra coefficients is checked to
confirm the reconstruction closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ReconstructionFailed

DEFAULT_GUARD = 5


@dataclass(frozen=True)
class CoefficientWindow:
    """Integer coefficients of a series on the degree range [lo, hi]."""

    lo: int
    hi: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"window lo {self.lo} exceeds hi {self.hi}")
        if len(self.values) != self.hi - self.lo + 1:
            raise ValueError("window length does not match its bounds")

    def as_dict(self):
        return {self.lo + k: v for k, v in enumerate(self.values)}


def _normalize_pairs(pairs):
    acc = {}
    for e, c in pairs:
        acc[e] = acc.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c != 0))


def _divide_by_one_minus_t(pairs):
    # prefix sums compute p / (1 - t); only valid when p(1) = 0
    lo = pairs[0][0]
    hi = pairs[-1][0]
    dense = [0] * (hi - lo + 1)
    for e, c in pairs:
        dense[e - lo] = c
    run = 0
    quot = []
    for off, c in enumerate(dense):
        run += c
        if run != 0:
            quot.append((lo + off, run))
    return tuple(quot)


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1 - t)^denom_power, numerator a sorted tuple of
    (exponent, coefficient) pairs with nonzero integer coefficients.

    Instances are reduced: when denom_power > 0 the numerator does not
    vanish at t = 1.  Use from_pairs to build one; it normalizes.
    """

    numerator: tuple[tuple[int, int], ...]
    denom_power: int

    def __post_init__(self):
        if self.denom_power < 0:
            raise ValueError(f"negative denominator power {self.denom_power}")
        exps = [e for e, _ in self.numerator]
        if exps != sorted(set(exps)) or any(c == 0 for _, c in self.numerator):
            raise ValueError("numerator pairs must be sorted, unique, nonzero")
        if self.denom_power > 0 and sum(c for _, c in self.numerator) == 0:
            raise ValueError("numerator divisible by (1 - t): not reduced")

    @staticmethod
    def from_pairs(pairs, denom_power):
        """Build a reduced series, cancelling (1 - t) factors as needed."""
        if denom_power < 0:
            raise ValueError(f"negative denominator power {denom_power}")
        num = _normalize_pairs(pairs)
        d = denom_power
        while num and d > 0 and sum(c for _, c in num) == 0:
            num = _divide_by_one_minus_t(num)
            d -= 1
        if not num:
            d = 0
        return HilbertSeries(num, d)

    # -- basic queries ----------------------------------------------------

    def is_zero(self):
        return not self.numerator

    def lowest_exponent(self):
        return self.numerator[0][0] if self.numerator else None

    def highest_exponent(self):
        return self.numerator[-1][0] if self.numerator else None

    def coeff(self, n):
        """Coefficient of t^n in the power series expansion."""
        d = self.denom_power
        if d == 0:
            return dict(self.numerator).get(n, 0)
        total = 0
        for e, c in self.numerator:
            if n - e >= 0:
                total += c * comb(n - e + d - 1, d - 1)
        return total

    # -- operations -------------------------------------------------------

    def shift(self, a):
        """Twist by a: coeff(result, n) == coeff(self, n + a)."""
        return HilbertSeries(tuple((e - a, c) for e, c in self.numerator),
                             self.denom_power)

    def window(self, lo, hi):
        return CoefficientWindow(lo, hi, tuple(self.coeff(n) for n in range(lo, hi + 1)))

    def hadamard(self, other, guard=DEFAULT_GUARD):
        """Coefficientwise product, reconstructed over (1-t)^(d1+d2-1).

        Both factors must have denominator power at least 1 (their
        coefficient streams are eventually polynomial).  The stream is
        expanded to the reconstruction bound plus guard extra terms; the
        guard coefficients of the recovered numerator must vanish.
        """
        if guard < 0:
            raise ValueError(f"negative guard {guard}")
        d1, d2 = self.denom_power, other.denom_power
        if d1 < 1 or d2 < 1:
            raise ReconstructionFailed(
                f"hadamard needs denominator powers >= 1, got {d1} and {d2}")
        dd = d1 + d2 - 1
        lo = max(self.lowest_exponent(), other.lowest_exponent())
        hi_support = max(self.highest_exponent() - d1,
                         other.highest_exponent() - d2) + dd
        top = hi_support + guard
        stream = [self.coeff(n) * other.coeff(n) for n in range(lo, top + 1)]
        # multiply the truncated stream by (1 - t)^dd; degrees <= top are exact
        signs = [(-1) ** j * comb(dd, j) for j in range(dd + 1)]
        num = []
        for off in range(len(stream)):
            c = sum(signs[j] * stream[off - j] for j in range(min(dd, off) + 1))
            if c:
                num.append((lo + off, c))
        for e, c in num:
            if e > hi_support:
                raise ReconstructionFailed(
                    f"guard coefficient {c} at degree {e} is nonzero; "
                    f"inputs are not eventually polynomial of the expected degree")
        return HilbertSeries.from_pairs(num, dd)


# ---------------------------------------------------------------------------
# text encoding: "num: c0 e0 c1 e1 ... ; den: d"


def format_series(h):
    parts = []
    for e, c in h.numerator:
        parts.append(str(c))
        parts.append(str(e))
    body = " ".join(parts)
    return f"num: {body} ; den: {h.denom_power}" if body else f"num: ; den: {h.denom_power}"


def parse_series(text):
    try:
        num_part, den_part = text.split(";")
    except ValueError:
        raise ValueError(f"series text needs one ';': {text!r}") from None
    num_part = num_part.strip()
    den_part = den_part.strip()
    if not num_part.startswith("num:") or not den_part.startswith("den:"):
        raise ValueError(f"series text needs 'num:' and 'den:' markers: {text!r}")
    tokens = num_part[len("num:"):].split()
    if len(tokens) % 2 != 0:
        raise ValueError(f"numerator tokens must come in (coeff, exponent) pairs: {text!r}")
    try:
        ints = [int(tok) for tok in tokens]
        d = int(den_part[len("den:"):].strip())
    except ValueError as exc:
        raise ValueError(f"bad integer in series text {text!r}: {exc}") from None
    pairs = [(ints[k + 1], ints[k]) for k in range(0, len(ints), 2)]
    return HilbertSeries.from_pairs(pairs, d)
