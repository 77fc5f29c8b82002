"""Reduction-vector bounds on fat point Hilbert functions.

Given a complete reduction vector v = (v_1, ..., v_r) of a scheme Z, the
Hilbert function is sandwiched for every degree t:

    f_v(t) = sum_i max(0, min(t - i + 1, v_{i+1}))        (lower)
    F_v(t) = min_i [ C(t+2,2) - C(t-i+2,2) + sum_{j>i} v_j ]   (upper)

with C(n, 2) = 0 for n < 2.  The summands of f are clamped at zero: a
negative t - i + 1 cannot contribute a negative number of conditions.

``peeling_sequence`` builds the standard line sequences whose reduction
vectors make these bounds tight at the degrees of interest: repeated
descending passes over the defining lines, the analogous passes over the
s + 1 full lines of a star, and the augmented variant that finishes with
the line through two private points plus one line per leftover private
point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from random import Random

from .geom import ProjLine, incident, line_through, random_point
from .scheme import FatPointScheme, ReductionVector, reduction_vector
from . import hilbert
from . import kconfig as _kconfig


class IncompleteReduction(ValueError):
    """Raised when a bound is requested from an incomplete reduction."""


class SandwichViolation(AssertionError):
    """f <= H <= F failed; signals an implementation bug, not bad input."""


class StrategyInapplicable(ValueError):
    """Raised when a peeling strategy does not fit the configuration."""


REPEAT_DESCENDING = "repeat_descending"
STAR = "star"
AUGMENTED = "augmented"


def f_lower(v: ReductionVector, t: int) -> int:
    if not v.complete:
        raise IncompleteReduction("lower bound requires a complete reduction")
    return sum(max(0, min(t - i + 1, val)) for i, val in enumerate(v.values))


def F_upper(v: ReductionVector, t: int) -> int:
    if not v.complete:
        raise IncompleteReduction("upper bound requires a complete reduction")

    def c2(n: int) -> int:
        return comb(n, 2) if n >= 2 else 0

    r = len(v.values)
    tail = sum(v.values)
    best = None
    for i in range(r + 1):
        term = c2(t + 2) - c2(t - i + 2) + tail
        if best is None or term < best:
            best = term
        if i < r:
            tail -= v.values[i]
    return best


@dataclass(frozen=True)
class BoundReport:
    t: int
    f_lower: int
    F_upper: int
    exact: int | None
    tight: bool

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "f_lower": self.f_lower,
            "F_upper": self.F_upper,
            "exact": self.exact,
            "tight": self.tight,
        }


def bound_check(z: FatPointScheme, lines, t: int) -> BoundReport:
    """Compute v, f, F and the exact value, asserting f <= H <= F."""
    v = reduction_vector(z, lines)
    if not v.complete:
        raise IncompleteReduction(
            "the supplied line sequence does not reduce the scheme to empty"
        )
    f = f_lower(v, t)
    F = F_upper(v, t)
    exact = hilbert.hilbert_value(z, t)
    if not f <= exact <= F:
        raise SandwichViolation(
            f"f={f}, H={exact}, F={F} at t={t}: bound machinery is broken"
        )
    return BoundReport(t, f, F, exact, f == F)


def peeling_sequence(x, m: int, strategy: str, seed: int = 0) -> list[ProjLine]:
    """A line sequence whose reduction of mX is complete.

    REPEAT_DESCENDING: the defining lines L_s .. L_1, m times over.
    STAR: the s + 1 full lines of a star configuration, ceil(m/2) passes.
    AUGMENTED: L_s .. L_1 repeated m - 1 times, then the line through two
    private points and one line per private point left off it; needs the
    case with exactly s full lines equal to the defining lines, and
    m >= 2.
    """
    if m < 1:
        raise ValueError("multiplicity must be positive")
    descending = list(reversed(x.lines))
    if strategy == REPEAT_DESCENDING:
        return descending * m
    if strategy == STAR:
        if x.ktype.ds != x.ktype.s:
            raise StrategyInapplicable("star peeling needs type (1, ..., s)")
        tri = _kconfig.classify_case(x)
        if tri.case != _kconfig.Case.MANY:
            raise StrategyInapplicable("star peeling needs s + 1 full lines")
        full = sorted(tri.full_lines, reverse=True)
        passes = -(-m // 2)
        return full * passes
    if strategy == AUGMENTED:
        return _augmented_sequence(x, m, seed)
    raise ValueError(f"unknown strategy {strategy!r}")


def _augmented_sequence(x, m: int, seed: int) -> list[ProjLine]:
    if m < 2:
        raise StrategyInapplicable("the augmented peeling needs m >= 2")
    if x.ktype.ds != x.ktype.s:
        raise StrategyInapplicable("augmented peeling needs type (1, ..., s)")
    tri = _kconfig.classify_case(x)
    if tri.case != _kconfig.Case.EXACT:
        raise StrategyInapplicable("augmented peeling needs exactly s full lines")
    if set(tri.full_lines) != set(x.lines):
        raise StrategyInapplicable(
            "augmented peeling needs the full lines to be the defining lines"
        )
    privates = {l: p for l, p in tri.privates.items()}
    s = x.ktype.s
    p1 = privates[x.lines[0]]
    p2 = privates[x.lines[1]]
    h = line_through(p1, p2)
    off = sorted(p for p in privates.values() if not incident(p, h))
    rng = Random(seed)
    extras = []
    points = set(x.points())
    for i, q in enumerate(off):
        later = off[i + 1 :]
        while True:
            aux = random_point(rng, bound=max(50, 4 * s))
            if aux == q:
                continue
            try:
                cand = line_through(q, aux)
            except ValueError:
                continue
            if any(incident(qq, cand) for qq in later):
                continue
            if any(incident(pp, cand) for pp in points if pp != q):
                continue
            extras.append(cand)
            break
    return list(reversed(x.lines)) * (m - 1) + [h] + extras
