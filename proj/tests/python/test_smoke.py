from fractions import Fraction

import pytest

import circlesep as cs


def five_dots():
    return cs.config([
        (0, Fraction(4, 5)),
        (0, Fraction(-9, 5)),
        (Fraction(147, 100), Fraction(82, 100)),
        (Fraction(-127, 100), Fraction(-27, 100)),
        (Fraction(73, 100), Fraction(-4, 5)),
    ])


def test_config_round_trip():
    c = cs.random_config(7, 3)
    assert len(c) == 7
    back = cs.Config.from_json(c.to_json())
    assert cs.planar(back) == cs.planar(c)
    assert cs.general_position_violation(c) is None


def test_cocircular_dots_are_reported():
    c = cs.config([(0, 0), (1, 0), (0, 1), (1, 1), (5, 7)])
    assert tuple(cs.general_position_violation(c)) == (0, 1, 2, 3)
    with pytest.raises(cs.CirclesepError) as info:
        cs.incident_histogram(c)
    assert info.value.args[0] == "NotGeneralPosition"


def test_strict_parsing():
    with pytest.raises(cs.CirclesepError) as info:
        cs.Config.from_json('{"dots":[{"u":"2/4","v":"1"}]}')
    assert info.value.args[0] == "Parse"


def test_counts():
    assert cs.incident_histogram(five_dots())[(1, 1)] == 4
    assert cs.avoidant_partition_count(cs.random_config(6, 1), 3, 3) == 7
    assert cs.hull_face_count(cs.random_config(9, 2)) == 14
    report = cs.counts_report(cs.random_config(8, 5))
    assert report["formula_match"] is True


def test_separable_sets_match_oracle():
    c = cs.random_config(6, 4)
    sets = cs.enumerate_separable(c, 2)
    assert len(sets) == 2 * 6 * 2 - 2 * 4 - 6 + 2
    for s in sets:
        assert cs.oracle_separable(c, s)


def test_voronoi():
    c = cs.random_config(6, 1)
    assert cs.strata_counts(c, 2) == (8, 12, 30, 12)
    g = cs.voronoi(c, 3)
    assert g["antipodal_check"] is True
    assert g["gluing"]["holds"] is True
    assert cs.voronoi_dot(c, 3) == cs.voronoi_dot(c, 3)


def test_move_log():
    a, b = cs.random_config(5, 11), cs.random_config(5, 12)
    log = cs.move_log(a, b, 2)
    assert log["endpoints_match"] is True
    assert all(e["counts_before"] == e["counts_after"] for e in log["events"])
    assert cs.move_log(a, a, 2)["events"] == []


def test_verify_all_small_grid():
    assert cs.verify_all(4, 5, 1)["all_pass"] is True
