"""Quantitative verification of line-count identities on configurations.

The central check: for a configuration of type (d_1, ..., d_s) other
than a single point, the first difference of the Hilbert function of the
multiplicity-m scheme at degree m*d_s - 1 equals the number of lines
meeting the configuration in exactly d_s points, once m reaches the
threshold m0 (2 when d_s > s, s + 1 when d_s = s).  Below the threshold
the identity can fail and reports record the mismatch without asserting.

Also covered: the reduced-scheme bound (the first difference of the
support's Hilbert function at d_s - 1 equals the tail length of the
type, and the line count never exceeds it by more than one), the
regularity index of multiples, the last nonzero first difference, and
the family of pairwise distinct Hilbert functions obtained by sweeping
the feasible maximal-line counts for type (1, ..., s).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from math import comb

from . import hilbert, kconfig
from .kconfig import InfeasibleLineCount, KConfiguration, KType, count_lines, fatten
from .scheme import FatPointScheme


class SinglePointType(ValueError):
    """The operation excludes the one-point type (infinitely many lines)."""


class MultiplicityBelowThreshold(ValueError):
    """The requested multiplicity is below the theorem's threshold."""


def m0(ktype: KType) -> int:
    """Threshold multiplicity: 2 when d_s > s, s + 1 when d_s = s."""
    if ktype.is_single_point():
        raise SinglePointType("no threshold for a single point")
    return 2 if ktype.ds > ktype.s else ktype.s + 1


def config_id(x: KConfiguration) -> str:
    payload = json.dumps(kconfig.kconfig_to_json(x), sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()[:12]


@dataclass(frozen=True)
class VerificationReport:
    config_id: str
    ktype: tuple[int, ...]
    m: int
    delta_value: int
    line_count: int
    m0: int
    matches: bool
    asserted: bool
    reduced_delta: int
    ri: int | None = None

    def to_json(self) -> dict:
        return {
            "config_id": self.config_id,
            "type": list(self.ktype),
            "m": self.m,
            "delta": self.delta_value,
            "line_count": self.line_count,
            "m0": self.m0,
            "matches": self.matches,
            "asserted": self.asserted,
            "reduced_delta": self.reduced_delta,
            "ri": self.ri,
        }


def verify_main(
    x: KConfiguration, m: int, include_ri: bool = False, ident: str | None = None
) -> VerificationReport:
    """Compare the first difference at m*d_s - 1 with the line count.

    The match is asserted by callers only when m >= m0; below that the
    report is informational (the identity genuinely fails for some
    configurations there).
    """
    if x.ktype.is_single_point():
        raise SinglePointType("verification needs at least two points")
    if m < 1:
        raise ValueError("multiplicity must be positive")
    ds = x.ktype.ds
    z = fatten(x, m)
    t_star = m * ds - 1
    upper = hilbert.hilbert_value(z, t_star)
    lower = hilbert.hilbert_value(z, t_star - 1) if t_star >= 1 else 0
    delta = upper - lower
    count, _ = count_lines(x, ds)
    threshold = m0(x.ktype)
    reduced = fatten(x, 1)
    red_delta = hilbert.hilbert_value(reduced, ds - 1) - (
        hilbert.hilbert_value(reduced, ds - 2) if ds >= 2 else 0
    )
    ri = hilbert.regularity_index(z) if include_ri else None
    return VerificationReport(
        config_id=ident or config_id(x),
        ktype=x.ktype.d,
        m=m,
        delta_value=delta,
        line_count=count,
        m0=threshold,
        matches=delta == count,
        asserted=m >= threshold,
        reduced_delta=red_delta,
        ri=ri,
    )


@dataclass(frozen=True)
class ReducedBoundReport:
    config_id: str
    ktype: tuple[int, ...]
    reduced_delta: int
    tail_length: int
    line_count: int
    support_value: int
    support_expected: int
    ok: bool

    def to_json(self) -> dict:
        return {
            "config_id": self.config_id,
            "type": list(self.ktype),
            "reduced_delta": self.reduced_delta,
            "tail_length": self.tail_length,
            "line_count": self.line_count,
            "support_value": self.support_value,
            "support_expected": self.support_expected,
            "ok": self.ok,
        }


def verify_reduced_bound(x: KConfiguration) -> ReducedBoundReport:
    """The reduced first difference equals the tail length and caps the
    line count at one more; the support value at d_s - 1 is the total
    point count."""
    if x.ktype.is_single_point():
        raise SinglePointType("the bound needs at least two points")
    ds = x.ktype.ds
    reduced = fatten(x, 1)
    h1 = hilbert.hilbert_value(reduced, ds - 1)
    h0 = hilbert.hilbert_value(reduced, ds - 2) if ds >= 2 else 0
    delta = h1 - h0
    tail = x.ktype.tail_length()
    count, _ = count_lines(x, ds)
    expected = x.ktype.total_points()
    ok = delta == tail and count <= delta + 1 and h1 == expected
    return ReducedBoundReport(
        config_id(x), x.ktype.d, delta, tail, count, h1, expected, ok
    )


@dataclass(frozen=True)
class RegularityReport:
    config_id: str
    m: int
    ri: int
    expected: int
    ok: bool

    def to_json(self) -> dict:
        return {
            "config_id": self.config_id,
            "m": self.m,
            "ri": self.ri,
            "expected": self.expected,
            "ok": self.ok,
        }


def verify_regularity(x: KConfiguration, m: int) -> RegularityReport:
    """ri(mX) = m * d_s - 1 for m >= s + 1; single points give m - 1."""
    if x.ktype.is_single_point():
        z = fatten(x, m)
        ri = hilbert.regularity_index(z)
        return RegularityReport(config_id(x), m, ri, m - 1, ri == m - 1)
    if m < x.ktype.s + 1:
        raise MultiplicityBelowThreshold(
            f"regularity statement needs m >= {x.ktype.s + 1}"
        )
    z = fatten(x, m)
    ri = hilbert.regularity_index(z)
    expected = m * x.ktype.ds - 1
    return RegularityReport(config_id(x), m, ri, expected, ri == expected)


@dataclass(frozen=True)
class LastNonzeroReport:
    config_id: str
    m: int
    last_t: int
    last_delta: int
    line_count: int
    ok: bool

    def to_json(self) -> dict:
        return {
            "config_id": self.config_id,
            "m": self.m,
            "last_t": self.last_t,
            "last_delta": self.last_delta,
            "line_count": self.line_count,
            "ok": self.ok,
        }


def verify_last_nonzero(x: KConfiguration, m: int) -> LastNonzeroReport:
    """The last nonzero first difference sits at m*d_s - 1 and equals the
    maximal-line count.  Needs m >= m0 (and m >= s + 1 for d_s = s)."""
    if x.ktype.is_single_point():
        raise SinglePointType("the statement needs at least two points")
    if m < m0(x.ktype):
        raise MultiplicityBelowThreshold(f"needs m >= {m0(x.ktype)}")
    z = fatten(x, m)
    ri = hilbert.regularity_index(z)
    last_delta = z.degree() - hilbert.hilbert_value(z, ri - 1)
    count, _ = count_lines(x, x.ktype.ds)
    expected_t = m * x.ktype.ds - 1
    ok = ri == expected_t and last_delta == count
    return LastNonzeroReport(config_id(x), m, ri, last_delta, count, ok)


@dataclass(frozen=True)
class FamilyMember:
    r: int
    config_id: str
    support_values: tuple[int, ...]
    fat_values: tuple[int, ...]
    value_at_probe: int
    degree: int


@dataclass(frozen=True)
class FamilyReport:
    s: int
    m: int
    members: tuple[FamilyMember, ...]
    infeasible: dict[int, str] = field(default_factory=dict)
    supports_ok: bool = False
    probe_ok: bool = False
    pairwise_distinct: bool = False

    @property
    def ok(self) -> bool:
        return self.supports_ok and self.probe_ok and self.pairwise_distinct

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "m": self.m,
            "members": [
                {
                    "r": mem.r,
                    "config_id": mem.config_id,
                    "support_values": list(mem.support_values),
                    "fat_values": list(mem.fat_values),
                    "value_at_probe": mem.value_at_probe,
                    "degree": mem.degree,
                }
                for mem in self.members
            ],
            "infeasible": {str(k): v for k, v in self.infeasible.items()},
            "supports_ok": self.supports_ok,
            "probe_ok": self.probe_ok,
            "pairwise_distinct": self.pairwise_distinct,
        }


def hilbert_family(s: int, m: int, seed: int = 0, bound: int = 20) -> FamilyReport:
    """One configuration per feasible maximal-line count r = 1 .. s+1.

    Checks that all supports share the Hilbert function
    min(C(t+2,2), C(s+1,2)), that the multiplicity-m values at m*s - 2
    equal deg - r, and that the resulting Hilbert functions are pairwise
    distinct.  For s = 2 only r = 3 is feasible (three non-collinear
    points always span three 2-point lines), so that family is a
    singleton; infeasible counts are recorded with the reason.
    """
    if s < 2:
        raise ValueError("need s >= 2")
    if m < s + 1:
        raise MultiplicityBelowThreshold("the family statement needs m >= s + 1")
    members = []
    infeasible: dict[int, str] = {}
    probe_t = m * s - 2
    t_max = m * s - 1
    support_cap = comb(s + 1, 2)
    expected_support = tuple(
        min(comb(t + 2, 2), support_cap) for t in range(s + 1)
    )
    for r in range(1, s + 2):
        try:
            x = kconfig.generate_with_line_count(s, r, seed, bound)
        except InfeasibleLineCount as exc:
            infeasible[r] = str(exc)
            continue
        support = fatten(x, 1)
        support_tab = hilbert.hilbert_table(support, s)
        z = fatten(x, m)
        fat_tab = hilbert.hilbert_table(z, t_max)
        members.append(
            FamilyMember(
                r=r,
                config_id=config_id(x),
                support_values=support_tab.values,
                fat_values=fat_tab.values,
                value_at_probe=fat_tab.values[probe_t],
                degree=z.degree(),
            )
        )
    supports_ok = all(mem.support_values == expected_support for mem in members)
    probe_ok = all(mem.value_at_probe == mem.degree - mem.r for mem in members)
    seen = {mem.fat_values for mem in members}
    distinct = len(seen) == len(members)
    return FamilyReport(
        s, m, tuple(members), infeasible, supports_ok, probe_ok, distinct
    )
