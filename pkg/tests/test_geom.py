import pytest
from hypothesis import given, strategies as st

from fatpoints.geom import (
    CoincidentLines,
    CoincidentPoints,
    ProjLine,
    ProjPoint,
    ZeroTriple,
    canonical_triple,
    collinear,
    incident,
    line_from_json,
    line_through,
    meet,
    point_from_json,
    triple_to_json,
)


def test_canonicalize_gcd():
    assert canonical_triple((2, 4, 6)) == (1, 2, 3)


def test_canonicalize_sign():
    assert canonical_triple((0, -3, 0)) == (0, 1, 0)


def test_canonicalize_identity():
    assert canonical_triple((1, 0, 0)) == (1, 0, 0)


def test_zero_triple_rejected():
    with pytest.raises(ZeroTriple):
        canonical_triple((0, 0, 0))
    with pytest.raises(ZeroTriple):
        ProjPoint((0, 0, 0))


def test_line_through_axes():
    assert line_through(ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0))) == ProjLine((0, 0, 1))
    assert line_through(ProjPoint((1, 0, 0)), ProjPoint((0, 0, 1))) == ProjLine((0, 1, 0))


def test_line_through_cross_product():
    l = line_through(ProjPoint((1, 1, 1)), ProjPoint((1, 2, 3)))
    assert l == ProjLine((1, -2, 1))
    assert incident(ProjPoint((1, 1, 1)), l)
    assert incident(ProjPoint((1, 2, 3)), l)


def test_line_through_coincident():
    with pytest.raises(CoincidentPoints):
        line_through(ProjPoint((1, 2, 3)), ProjPoint((2, 4, 6)))


def test_meet_axes():
    assert meet(ProjLine((0, 0, 1)), ProjLine((0, 1, 0))) == ProjPoint((1, 0, 0))


def test_meet_duality():
    p, q, r = ProjPoint((1, 1, 1)), ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0))
    assert meet(line_through(p, q), line_through(p, r)) == p


def test_meet_cross_product():
    assert meet(ProjLine((1, -2, 1)), ProjLine((0, 0, 1))) == ProjPoint((2, 1, 0))


def test_meet_coincident():
    with pytest.raises(CoincidentLines):
        meet(ProjLine((1, 0, 0)), ProjLine((-2, 0, 0)))


def test_incident_basic():
    assert incident(ProjPoint((1, 0, 0)), ProjLine((0, 1, 0)))
    assert not incident(ProjPoint((1, 1, 1)), ProjLine((1, 0, 0)))


def test_collinear_examples():
    pts = [ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0)), ProjPoint((1, 1, 0))]
    assert collinear(pts)
    assert not collinear([ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0)), ProjPoint((0, 0, 1))])
    assert collinear([])
    assert collinear([ProjPoint((1, 2, 3))])
    assert collinear([ProjPoint((1, 2, 3)), ProjPoint((1, 2, 3))])


nonzero_triples = st.tuples(
    st.integers(-80, 80), st.integers(-80, 80), st.integers(-80, 80)
).filter(lambda t: t != (0, 0, 0))


@given(nonzero_triples, st.integers(-20, 20).filter(lambda k: k != 0))
def test_canonicalize_scale_invariant(triple, k):
    scaled = tuple(k * v for v in triple)
    assert canonical_triple(scaled) == canonical_triple(triple)


@given(nonzero_triples)
def test_canonicalize_idempotent(triple):
    once = canonical_triple(triple)
    assert canonical_triple(once) == once


@given(nonzero_triples, nonzero_triples)
def test_join_incidence(a, b):
    p, q = ProjPoint(a), ProjPoint(b)
    if p == q:
        return
    l = line_through(p, q)
    assert incident(p, l) and incident(q, l)


@given(nonzero_triples, nonzero_triples)
def test_join_meet_inverse(a, b):
    l1, l2 = ProjLine(a), ProjLine(b)
    if l1 == l2:
        return
    p = meet(l1, l2)
    assert incident(p, l1) and incident(p, l2)


def test_json_round_trip():
    p = ProjPoint((10**40, -3, 7))
    data = triple_to_json(p)
    assert data == [str(10**40), "-3", "7"]
    assert point_from_json(data) == p
    l = ProjLine((0, -6, 4))
    assert line_from_json(triple_to_json(l)) == l
    # non-canonical input is canonicalized on read
    assert point_from_json(["2", "4", "6"]) == ProjPoint((1, 2, 3))
    assert line_from_json([0, -6, 4]) == ProjLine((0, 3, -2))
