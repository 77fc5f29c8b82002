import pytest

from corpus import (
    config_123_one,
    config_123_star,
    config_1234,
    config_1345,
    full_corpus,
)
from fatpoints.kconfig import KType, generate_generic, generate_with_line_count
from fatpoints.verify import (
    MultiplicityBelowThreshold,
    SinglePointType,
    hilbert_family,
    m0,
    verify_last_nonzero,
    verify_main,
    verify_reduced_bound,
    verify_regularity,
)


def test_m0_values():
    assert m0(KType((1, 3, 4, 5))) == 2
    assert m0(KType((1, 2, 3))) == 4
    assert m0(KType((2, 4))) == 2
    with pytest.raises(SinglePointType):
        m0(KType((1,)))


def test_verify_main_walkthrough():
    rep = verify_main(config_1345(), 2)
    assert rep.delta_value == 3 and rep.line_count == 3
    assert rep.matches and rep.asserted


def test_verify_main_below_threshold_mismatch():
    rep = verify_main(config_123_one(), 2)
    assert rep.delta_value == 3 and rep.line_count == 1
    assert not rep.matches and not rep.asserted  # informational only


def test_verify_main_at_threshold():
    rep = verify_main(config_123_one(), 4)
    assert rep.delta_value == 1 and rep.line_count == 1
    assert rep.matches and rep.asserted


def test_verify_main_four_line_shape():
    rep = verify_main(config_1234(), 2)
    assert rep.delta_value == 4 and rep.line_count == 4 and rep.matches


def test_verify_main_single_point_refused():
    x = generate_generic(KType((1,)), seed=1)
    with pytest.raises(SinglePointType):
        verify_main(x, 2)


def test_reduced_bound_consecutive_type():
    for x, expected_count in [
        (config_123_one(), 1),
        (config_123_star(), 4),
    ]:
        rep = verify_reduced_bound(x)
        assert rep.reduced_delta == 3 == rep.tail_length
        assert rep.line_count == expected_count <= rep.reduced_delta + 1
        assert rep.support_value == 6 == rep.support_expected
        assert rep.ok


def test_reduced_bound_walkthrough_type():
    rep = verify_reduced_bound(config_1345())
    assert rep.tail_length == 3
    assert rep.line_count == 3 <= 4
    assert rep.support_value == 13
    assert rep.ok


def test_reduced_bound_sparse_type():
    x = generate_generic(KType((2, 5)), seed=3, bound=15)
    rep = verify_reduced_bound(x)
    assert rep.tail_length == 1
    assert rep.line_count <= 2
    assert rep.ok


def test_verify_regularity_small():
    rep = verify_regularity(config_123_one(), 4)
    assert rep.ri == 11 and rep.ok


def test_verify_regularity_threshold():
    with pytest.raises(MultiplicityBelowThreshold):
        verify_regularity(config_123_one(), 3)


def test_verify_regularity_single_point():
    x = generate_generic(KType((1,)), seed=1)
    for m in (1, 2, 5):
        rep = verify_regularity(x, m)
        assert rep.ri == m - 1 and rep.ok


def test_verify_last_nonzero_walkthrough():
    rep = verify_last_nonzero(config_1345(), 2)
    assert rep.last_t == 9 and rep.last_delta == 3 == rep.line_count
    assert rep.ok


def test_verify_last_nonzero_counterexample_resolves():
    rep = verify_last_nonzero(config_123_one(), 4)
    assert rep.last_t == 11 and rep.last_delta == 1 == rep.line_count
    assert rep.ok


def test_verify_last_nonzero_small_star():
    x = generate_with_line_count(2, 3, seed=0, bound=12)
    rep = verify_last_nonzero(x, 3)
    assert rep.last_t == 5 and rep.last_delta == 3 == rep.line_count
    assert rep.ok


def test_family_s2_is_singleton():
    rep = hilbert_family(2, 3, seed=0)
    assert [mem.r for mem in rep.members] == [3]
    assert set(rep.infeasible) == {1, 2}
    assert rep.supports_ok and rep.probe_ok and rep.pairwise_distinct
    mem = rep.members[0]
    assert mem.value_at_probe == mem.degree - 3 == 18 - 3


def test_family_s3_complete():
    rep = hilbert_family(3, 4, seed=0)
    assert [mem.r for mem in rep.members] == [1, 2, 3, 4]
    assert rep.ok
    for mem in rep.members:
        assert mem.degree == 60
        assert mem.value_at_probe == 60 - mem.r
        assert mem.support_values == (1, 3, 6, 6)


def test_family_threshold():
    with pytest.raises(MultiplicityBelowThreshold):
        hilbert_family(3, 3, seed=0)
