import pytest

from tangentia.census import (
    CHI_CUBIC_NONFLEX_SPECIAL,
    CHI_QUARTIC_ORDER2_SPECIAL,
    CHI_QUARTIC_ORDER4_SPECIAL,
    CHI_SURFACE,
    CHI_TRIPLE_TANGENT_LINE,
    COVER,
    CUSPIDAL,
    IMMERSED,
    NONFLEX_NINE,
    PAIR,
    Component,
    aggregate_N,
    boundary_census,
    census_strata,
    class_curve_counts,
    count_M4,
    euler_budget,
    quadrisection_split,
    stratum_point_count,
)
from tangentia.torsion import Stratum


def test_euler_budget():
    assert euler_budget(CHI_SURFACE, CHI_QUARTIC_ORDER2_SPECIAL) == 6
    assert euler_budget(CHI_SURFACE, CHI_QUARTIC_ORDER4_SPECIAL) == 8
    assert euler_budget(CHI_SURFACE, CHI_TRIPLE_TANGENT_LINE) == 2
    assert euler_budget(CHI_SURFACE, CHI_CUBIC_NONFLEX_SPECIAL) == 3
    with pytest.raises(ValueError):
        euler_budget(-1, 4)
    with pytest.raises(ValueError):
        euler_budget(12, -2)


def test_quadrisection_split():
    assert quadrisection_split() == {Stratum.T1: 1, Stratum.T2: 3, Stratum.T3: 12}


def test_class_curve_counts():
    assert class_curve_counts(0) == {Stratum.T1: 1, Stratum.T2: 3, Stratum.T3: 12}
    assert class_curve_counts(1) == {Stratum.T1: 0, Stratum.T2: 18, Stratum.T3: 96}
    with pytest.raises(ValueError):
        class_curve_counts(2)


def test_aggregate_N():
    totals = aggregate_N()
    assert totals == {Stratum.T1: 216, Stratum.T2: 1134, Stratum.T3: 5184}
    # independent recomputation from the table totals: 216 ordered classes
    # of genus 0 and 27 of genus 1
    assert totals[Stratum.T1] == 216 * 1 + 27 * 0
    assert totals[Stratum.T2] == 216 * 3 + 27 * 18
    assert totals[Stratum.T3] == 216 * 12 + 27 * 96


def test_count_M4():
    assert [count_M4(s) for s in Stratum] == [8, 14, 16]


def test_count_cross_check():
    total = sum(aggregate_N().values())
    weighted = 9 * count_M4(Stratum.T1) + 27 * count_M4(Stratum.T2) \
        + 108 * count_M4(Stratum.T3)
    assert weighted == 2178
    assert total == 3 * 2178


def test_census_strata_per_degree():
    assert census_strata(1) == ("T1",)
    assert census_strata(2) == ("T1", "T2")
    assert census_strata(3) == ("T1", NONFLEX_NINE)
    assert census_strata(4) == ("T1", "T2", "T3")
    with pytest.raises(ValueError):
        census_strata(5)


def test_stratum_point_counts():
    assert stratum_point_count("T1") == 9
    assert stratum_point_count("T2") == 27
    assert stratum_point_count("T3") == 108
    assert stratum_point_count(NONFLEX_NINE) == 72


def _kinds(entry):
    return [(c.kind, c.count) for c in entry.components]


def test_boundary_census_low_degrees():
    assert _kinds(boundary_census(1, "T1")) == [(IMMERSED, 1)]
    d2_flex = boundary_census(2, Stratum.T1)
    assert _kinds(d2_flex) == [(COVER, 1)]
    assert d2_flex.components[0].base_degree == 1
    assert d2_flex.components[0].multiplicity == 2
    assert _kinds(boundary_census(2, "T2")) == [(IMMERSED, 1)]


def test_boundary_census_degree_three():
    flex = boundary_census(3, "T1")
    assert _kinds(flex) == [(COVER, 1), (IMMERSED, 2)]
    nonflex = boundary_census(3, NONFLEX_NINE)
    assert _kinds(nonflex) == [(IMMERSED, 3)]
    assert nonflex.points == 72


def test_boundary_census_degree_four():
    flex = boundary_census(4, "T1")
    assert _kinds(flex) == [(COVER, 1), (PAIR, 2), (IMMERSED, 8)]
    assert flex.components[0].multiplicity == 4
    assert flex.components[1].tangencies == (3, 9)
    t2 = boundary_census(4, "T2")
    assert _kinds(t2) == [(COVER, 1), (IMMERSED, 14)]
    assert t2.components[0].base_degree == 2
    assert _kinds(boundary_census(4, "T3")) == [(IMMERSED, 16)]


def test_census_immersed_counts_match_aggregate():
    for stratum in Stratum:
        entry = boundary_census(4, stratum)
        immersed = sum(c.count for c in entry.components if c.kind == IMMERSED)
        assert immersed == count_M4(stratum)


def test_special_cubic_variant():
    entry = boundary_census(3, "T1", special_cubic=True)
    assert _kinds(entry) == [(COVER, 1), (CUSPIDAL, 1)]
    assert entry.special_cubic
    # other strata and degrees 1, 2 are untouched by the flag
    assert _kinds(boundary_census(3, NONFLEX_NINE, special_cubic=True)) == \
        _kinds(boundary_census(3, NONFLEX_NINE))
    assert _kinds(boundary_census(2, "T1", special_cubic=True)) == \
        _kinds(boundary_census(2, "T1"))
    with pytest.raises(ValueError):
        boundary_census(4, "T1", special_cubic=True)


def test_boundary_census_rejects_bad_input():
    with pytest.raises(ValueError):
        boundary_census(1, "T2")
    with pytest.raises(ValueError):
        boundary_census(4, NONFLEX_NINE)
    with pytest.raises(ValueError):
        boundary_census(0, "T1")
    with pytest.raises(ValueError):
        boundary_census(3, "T9")


def test_component_validation():
    with pytest.raises(ValueError):
        Component("spiral", 1)
    with pytest.raises(ValueError):
        Component(COVER, 1)  # missing base_degree and multiplicity
    with pytest.raises(ValueError):
        Component(PAIR, 1)  # missing tangencies
    with pytest.raises(ValueError):
        Component(IMMERSED, 0)
