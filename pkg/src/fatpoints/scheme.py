"""Fat point schemes in the projective plane.

A scheme is a finite set of distinct points with positive multiplicities.
Its degree is the number of linear conditions it imposes in large degree,
``sum of C(m_i + 1, 2)``.  Removing a line decrements the multiplicity of
every point on it (the ideal-quotient residual for fat points), which is
the whole computational content of reduction vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .geom import ProjLine, ProjPoint, incident, line_from_json, point_from_json, triple_to_json


class DuplicatePoint(ValueError):
    """Raised when the same canonical point is listed twice."""


class NonPositiveMultiplicity(ValueError):
    """Raised when a multiplicity is not a positive integer."""


@dataclass(frozen=True)
class FatPointScheme:
    """Immutable multiset of (point, multiplicity), keyed canonically."""

    entries: tuple[tuple[ProjPoint, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @classmethod
    def from_points(cls, points, mults) -> "FatPointScheme":
        points = list(points)
        mults = list(mults)
        if len(points) != len(mults):
            raise ValueError("points and multiplicities differ in length")
        seen = {}
        for p, m in zip(points, mults):
            if not isinstance(m, int) or m < 1:
                raise NonPositiveMultiplicity(f"multiplicity {m!r} for {p}")
            if p in seen:
                raise DuplicatePoint(f"point {p} listed twice")
            seen[p] = m
        return cls(tuple(seen.items()))

    @classmethod
    def homogeneous(cls, points, m: int) -> "FatPointScheme":
        """The scheme with every point taken at the same multiplicity m."""
        points = list(points)
        return cls.from_points(points, [m] * len(points))

    def multiplicity(self, p: ProjPoint) -> int:
        for q, m in self.entries:
            if q == p:
                return m
        return 0

    def support(self) -> tuple[ProjPoint, ...]:
        return tuple(p for p, _ in self.entries)

    def degree(self) -> int:
        return sum(comb(m + 1, 2) for _, m in self.entries)

    def is_empty(self) -> bool:
        return not self.entries

    def line_degree(self, l: ProjLine) -> int:
        """Sum of multiplicities of the points incident to l."""
        return sum(m for p, m in self.entries if incident(p, l))

    def residual(self, l: ProjLine) -> "FatPointScheme":
        """Decrement every multiplicity on l by one, dropping zeros."""
        out = []
        for p, m in self.entries:
            if incident(p, l):
                if m > 1:
                    out.append((p, m - 1))
            else:
                out.append((p, m))
        return FatPointScheme(tuple(out))

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ReductionVector:
    """Degrees removed by a sequence of lines, with completeness flag."""

    values: tuple[int, ...]
    lines: tuple[ProjLine, ...]
    complete: bool

    def total(self) -> int:
        return sum(self.values)


def reduction_vector(z: FatPointScheme, lines) -> ReductionVector:
    """Record deg(L_i meet Z_{i-1}) along the residual chain.

    The reduction is complete when the final residual scheme is empty,
    equivalently when the entries sum to deg(Z); both the chain and the
    flag stop with the supplied sequence, so partial reductions can be
    studied as-is.
    """
    lines = tuple(lines)
    values = []
    current = z
    for l in lines:
        values.append(current.line_degree(l))
        current = current.residual(l)
    return ReductionVector(tuple(values), lines, current.is_empty())


def residual_chain(z: FatPointScheme, lines) -> list[FatPointScheme]:
    """The full chain Z_0, Z_1, ..., one scheme per removed line."""
    chain = [z]
    for l in lines:
        chain.append(chain[-1].residual(l))
    return chain


# --- JSON wire format -----------------------------------------------------

def scheme_to_json(z: FatPointScheme) -> dict:
    return {
        "points": [triple_to_json(p) for p, _ in z.entries],
        "mults": [m for _, m in z.entries],
    }


def scheme_from_json(data: dict) -> FatPointScheme:
    points = [point_from_json(t) for t in data["points"]]
    mults = [int(m) for m in data["mults"]]
    return FatPointScheme.from_points(points, mults)


def lines_from_json(data) -> list[ProjLine]:
    return [line_from_json(t) for t in data]


def lines_to_json(lines) -> list[list[str]]:
    return [triple_to_json(l) for l in lines]
