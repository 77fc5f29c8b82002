"""Exact projective-plane primitives over the rationals.

Points and lines are homogeneous integer triples kept in a canonical form:
coordinates divided by their gcd, with the first nonzero coordinate
positive.  Every projective point or line over Q has exactly one such
representative, so equality and hashing are structural.  All operations
are pure integer arithmetic; values are immutable and safe to share
between threads.

Rank computations downstream are unaffected by working over Q instead of
an algebraically closed field: matrix ranks are invariant under field
extension, so rational coordinates are faithful in characteristic zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from random import Random


class ZeroTriple(ValueError):
    """Raised when all three homogeneous coordinates are zero."""


class CoincidentPoints(ValueError):
    """Raised when a line is requested through a single point."""


class CoincidentLines(ValueError):
    """Raised when the meet of a line with itself is requested."""


def canonical_triple(triple) -> tuple[int, int, int]:
    """Return the canonical representative of a homogeneous triple.

    Divides by the gcd and flips sign so the first nonzero entry is
    positive.  Idempotent and invariant under scaling by nonzero
    integers.
    """
    a, b, c = (int(v) for v in triple)
    if a == 0 and b == 0 and c == 0:
        raise ZeroTriple("homogeneous triple must not be (0, 0, 0)")
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    for v in (a, b, c):
        if v > 0:
            return (a, b, c)
        if v < 0:
            return (-a, -b, -c)
    raise AssertionError("unreachable")


def _cross(u: tuple[int, int, int], v: tuple[int, int, int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A point of the projective plane with canonical integer coordinates."""

    coords: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "coords", canonical_triple(self.coords))

    def __repr__(self) -> str:
        a, b, c = self.coords
        return f"ProjPoint(({a}:{b}:{c}))"


@dataclass(frozen=True, order=True)
class ProjLine:
    """A line a*x0 + b*x1 + c*x2 = 0 with canonical integer coefficients."""

    coeffs: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", canonical_triple(self.coeffs))

    def __repr__(self) -> str:
        a, b, c = self.coeffs
        return f"ProjLine(({a}:{b}:{c}))"


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points (cross product)."""
    if p == q:
        raise CoincidentPoints(f"no unique line through {p} twice")
    return ProjLine(_cross(p.coords, q.coords))


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique intersection point of two distinct lines."""
    if l1 == l2:
        raise CoincidentLines(f"no unique meet of {l1} with itself")
    return ProjPoint(_cross(l1.coeffs, l2.coeffs))


def incident(p: ProjPoint, l: ProjLine) -> bool:
    """Exact incidence test: the dot product vanishes."""
    pa, pb, pc = p.coords
    la, lb, lc = l.coeffs
    return pa * la + pb * lb + pc * lc == 0


def collinear(points) -> bool:
    """True iff all points lie on one common line.

    Vacuously true for fewer than three distinct points.
    """
    distinct = []
    for p in points:
        if p not in distinct:
            distinct.append(p)
        if len(distinct) > 2:
            break
    else:
        return True
    l = line_through(distinct[0], distinct[1])
    return all(incident(p, l) for p in points)


def random_point(rng: Random, bound: int = 50) -> ProjPoint:
    """A random point with coordinates sampled uniformly from [-bound, bound]."""
    while True:
        triple = tuple(rng.randint(-bound, bound) for _ in range(3))
        if triple != (0, 0, 0):
            return ProjPoint(triple)


def random_line(rng: Random, bound: int = 50) -> ProjLine:
    """A random line with coefficients sampled uniformly from [-bound, bound]."""
    while True:
        triple = tuple(rng.randint(-bound, bound) for _ in range(3))
        if triple != (0, 0, 0):
            return ProjLine(triple)


def line_basis(l: ProjLine) -> tuple[ProjPoint, ProjPoint]:
    """Two distinct points spanning the given line."""
    a, b, c = l.coeffs
    if a != 0:
        return ProjPoint((-b, a, 0)), ProjPoint((-c, 0, a))
    if b != 0:
        return ProjPoint((1, 0, 0)), ProjPoint((0, -c, b))
    return ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0))


def random_point_on(l: ProjLine, rng: Random, bound: int = 50) -> ProjPoint:
    """A random point incident to l, as an integer combination of a basis."""
    b1, b2 = line_basis(l)
    while True:
        u = rng.randint(-bound, bound)
        v = rng.randint(-bound, bound)
        if u == 0 and v == 0:
            continue
        triple = tuple(u * x + v * y for x, y in zip(b1.coords, b2.coords))
        return ProjPoint(triple)


# --- JSON wire format: arrays of three decimal-string integers -----------

def triple_to_json(obj) -> list[str]:
    triple = obj.coords if isinstance(obj, ProjPoint) else obj.coeffs
    return [str(v) for v in triple]


def point_from_json(data) -> ProjPoint:
    return ProjPoint(_triple_from_json(data))


def line_from_json(data) -> ProjLine:
    return ProjLine(_triple_from_json(data))


def _triple_from_json(data) -> tuple[int, int, int]:
    if not isinstance(data, (list, tuple)) or len(data) != 3:
        raise ValueError(f"expected a triple of integers, got {data!r}")
    return tuple(int(v) for v in data)
