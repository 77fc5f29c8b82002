import random

import pytest

from corpus import config_1234, config_1345
from fatpoints.cht import REPEAT_DESCENDING, peeling_sequence
from fatpoints.geom import ProjLine, ProjPoint, random_line, random_point
from fatpoints.kconfig import fatten
from fatpoints.scheme import (
    DuplicatePoint,
    FatPointScheme,
    NonPositiveMultiplicity,
    lines_from_json,
    reduction_vector,
    residual_chain,
    scheme_from_json,
    scheme_to_json,
)


def test_from_points_walkthrough_degree():
    z = fatten(config_1345(), 2)
    assert len(z) == 13
    assert z.degree() == 39


def test_from_points_single_and_empty():
    p = ProjPoint((1, 2, 3))
    for m in range(1, 7):
        assert FatPointScheme.from_points([p], [m]).degree() == m * (m + 1) // 2
    assert FatPointScheme.from_points([], []).degree() == 0
    assert FatPointScheme.from_points([], []).is_empty()


def test_from_points_errors():
    p = ProjPoint((1, 0, 0))
    with pytest.raises(DuplicatePoint):
        FatPointScheme.from_points([p, ProjPoint((2, 0, 0))], [1, 1])
    with pytest.raises(NonPositiveMultiplicity):
        FatPointScheme.from_points([p], [0])


def test_line_degree_walkthrough():
    x = config_1345()
    z = fatten(x, 2)
    l4 = x.lines[3]  # five double points
    assert z.line_degree(l4) == 10
    z1 = z.residual(l4)
    l3 = x.lines[2]  # four doubles and one reduced point
    assert z1.line_degree(l3) == 9
    faraway = ProjLine((1, 1, 1))
    assert z.line_degree(faraway) == 0


def test_residual_drops_and_removes():
    p, q = ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0))
    l = ProjLine((0, 0, 1))  # through both
    z = FatPointScheme.from_points([p, q], [2, 1])
    z1 = z.residual(l)
    assert z1.multiplicity(p) == 1
    assert z1.multiplicity(q) == 0
    assert z1.residual(l).is_empty()


def test_residual_chain_multiplicity_panels():
    """After removing the two largest lines, the five-point line's points
    drop to multiplicity one except the shared corner, which is gone."""
    x = config_1345()
    z = fatten(x, 2)
    chain = residual_chain(z, [x.lines[3], x.lines[2]])
    z2 = chain[2]
    corner = ProjPoint((8, 0, 1))  # on both removed lines
    assert z2.multiplicity(corner) == 0
    for pt in x.subsets[3]:
        if pt != corner:
            assert z2.multiplicity(pt) == 1
    for pt in x.subsets[2]:
        if pt != corner:
            assert z2.multiplicity(pt) == 1
    for pt in x.subsets[1]:
        assert z2.multiplicity(pt) == 2
    assert z2.multiplicity(x.subsets[0][0]) == 2


def test_reduction_vector_walkthrough():
    x = config_1345()
    z = fatten(x, 2)
    v = reduction_vector(z, peeling_sequence(x, 2, REPEAT_DESCENDING))
    assert v.values == (10, 9, 8, 3, 3, 3, 2, 1)
    assert v.complete
    assert v.total() == z.degree()


def test_reduction_vector_four_line_shape():
    x = config_1234()
    z = fatten(x, 2)
    v = reduction_vector(z, peeling_sequence(x, 2, REPEAT_DESCENDING))
    assert v.values == (8, 7, 6, 5, 1, 1, 1, 1)
    assert v.complete


def test_reduction_vector_augmented_shape():
    from fatpoints.cht import AUGMENTED

    x = config_1234()
    z = fatten(x, 2)
    v = reduction_vector(z, peeling_sequence(x, 2, AUGMENTED))
    assert v.values == (8, 7, 6, 5, 2, 1, 1)
    assert v.complete


def test_degree_examples():
    assert fatten(config_1345(), 2).degree() == 39
    assert FatPointScheme.from_points([], []).degree() == 0
    assert FatPointScheme.from_points([ProjPoint((1, 1, 1))], [5]).degree() == 15


def test_completeness_iff_total_degree():
    rng = random.Random(99)
    for _ in range(40):
        pts = []
        while len(pts) < rng.randint(1, 6):
            p = random_point(rng, 9)
            if p not in pts:
                pts.append(p)
        mults = [rng.randint(1, 3) for _ in pts]
        z = FatPointScheme.from_points(pts, mults)
        # peel lines through remaining points until empty
        lines = []
        cur = z
        while not cur.is_empty():
            target = cur.support()[0]
            other = random_point(rng, 9)
            if other == target:
                continue
            from fatpoints.geom import line_through

            l = line_through(target, other)
            lines.append(l)
            cur = cur.residual(l)
        v = reduction_vector(z, lines)
        assert v.complete and v.total() == z.degree()
        if lines:
            partial = reduction_vector(z, lines[:-1])
            assert not partial.complete
            assert partial.total() < z.degree()


def test_residual_degree_drop_is_line_degree():
    # dropping m to m-1 removes C(m+1,2) - C(m,2) = m from the degree,
    # so the total drop is exactly the line degree
    rng = random.Random(5)
    for _ in range(30):
        pts = []
        while len(pts) < 5:
            p = random_point(rng, 9)
            if p not in pts:
                pts.append(p)
        z = FatPointScheme.from_points(pts, [rng.randint(1, 3) for _ in pts])
        l = random_line(rng, 9)
        assert z.residual(l).degree() == z.degree() - z.line_degree(l)


def test_residual_never_increases_multiplicity():
    rng = random.Random(6)
    for _ in range(20):
        pts = []
        while len(pts) < 4:
            p = random_point(rng, 9)
            if p not in pts:
                pts.append(p)
        z = FatPointScheme.from_points(pts, [rng.randint(1, 3) for _ in pts])
        z1 = z.residual(random_line(rng, 9))
        for p in z.support():
            assert z1.multiplicity(p) <= z.multiplicity(p)


def test_scheme_json_round_trip():
    x = config_1345()
    z = fatten(x, 2)
    data = scheme_to_json(z)
    assert scheme_from_json(data) == z
    lines = lines_from_json([["0", "1", "0"], [1, -1, 0]])
    assert lines == [ProjLine((0, 1, 0)), ProjLine((1, -1, 0))]
