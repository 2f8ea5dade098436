import itertools

import pytest

from greenvar.closedform_is import (
    closed_classification_is,
    count_is_classes,
    d_class_is,
    falling_factorial,
    h_class_is,
    l_class_is,
    r_class_is,
    right_divisible,
)
from greenvar.elements import (
    FAMILY_IS,
    empty_map,
    enumerate_family,
    identity,
    parse_element,
)
from greenvar.engine import brute_classification, variant_product


def pp(text):
    return parse_element(FAMILY_IS, text)


# ---------------------------------------------------------------------------
# the divisibility criterion behind the class descriptions


def test_right_divisible_witness_verifies_exhaustive_n3():
    a = pp("1,2,-")
    universe = enumerate_family(FAMILY_IS, 3)
    solvable = 0
    for x, y in itertools.product(universe, repeat=2):
        verdict = right_divisible(x, y, a)
        if verdict.solvable:
            solvable += 1
            assert variant_product(y, a, verdict.witness) == x
    assert solvable > 0


def test_right_divisible_criterion_vs_actual_solvability_n2():
    # The criterion is sound.  Completeness fails exactly where ran(y)
    # escapes dom(a) at points dom(x) never reaches: true solvability is
    # dom(x) inside dom(y) and y(dom(x)) inside dom(a).
    universe = enumerate_family(FAMILY_IS, 2)
    for a in universe:
        for x, y in itertools.product(universe, repeat=2):
            actual = any(variant_product(y, a, u) == x for u in universe)
            exact = x.dom <= y.dom and all(y(i) in a.dom for i in x.dom)
            verdict = right_divisible(x, y, a)
            assert actual == exact
            if verdict.solvable:
                assert actual
            elif actual:
                assert not y.ran <= a.dom  # the gap is only ever condition 2


# ---------------------------------------------------------------------------
# single-class closed forms, frozen from the brute-force oracle


def test_frozen_classes_is3():
    a = pp("1,2,-")
    x = pp("1,-,-")
    assert r_class_is(x, a) == {pp("1,-,-"), pp("2,-,-")}
    assert l_class_is(x, a) == {pp("1,-,-"), pp("-,1,-")}
    assert h_class_is(x, a) == {x}
    assert d_class_is(x, a) == {pp("1,-,-"), pp("2,-,-"), pp("-,1,-"), pp("-,2,-")}


def test_escaping_range_means_singleton_r_class():
    a = pp("1,2,-")
    x = pp("3,-,-")  # ran(x) = {3} escapes dom(a) = {1, 2}
    assert r_class_is(x, a) == {x}


def test_classes_contain_their_element_everywhere():
    for a in enumerate_family(FAMILY_IS, 3):
        for x in enumerate_family(FAMILY_IS, 3):
            for fn in (r_class_is, l_class_is, h_class_is, d_class_is):
                for mode in ("corrected", "literal"):
                    assert x in fn(x, a, mode)


# ---------------------------------------------------------------------------
# whole-universe classifications against brute force


@pytest.mark.parametrize("relation", ("r", "l", "h", "d"))
def test_corrected_matches_brute_is3(relation):
    for a in enumerate_family(FAMILY_IS, 3):
        closed = closed_classification_is(3, a, relation)
        brute = brute_classification(FAMILY_IS, 3, a, relation)
        assert closed.same_partition(brute), str(a)
        assert closed.method == "closed-corrected"


def test_literal_d_drift_is_exactly_the_joint_case():
    # r, l, h agree in both modes; d drifts wherever the joint case merges
    # unequal ranks. At n = 3 that is all but the rank-0 deformation.
    drifted = []
    for a in enumerate_family(FAMILY_IS, 3):
        for relation in ("r", "l", "h"):
            assert closed_classification_is(3, a, relation, "literal").same_partition(
                closed_classification_is(3, a, relation, "corrected")
            )
        lit = closed_classification_is(3, a, "d", "literal")
        if not lit.same_partition(brute_classification(FAMILY_IS, 3, a, "d")):
            drifted.append(a)
    assert len(drifted) == 33
    assert empty_map(3) not in drifted


def test_literal_d_counterexample_at_identity_n2():
    a = identity(FAMILY_IS, 2)
    lit = closed_classification_is(2, a, "d", "literal")
    assert lit.class_of(a) == tuple(enumerate_family(FAMILY_IS, 2))  # absorbs all 7
    brute = brute_classification(FAMILY_IS, 2, a, "d")
    assert set(brute.class_of(a)) == {pp("1,2"), pp("2,1")}


def test_mode_and_relation_validation():
    a = pp("1,2")
    with pytest.raises(ValueError):
        closed_classification_is(2, a, "r", mode="verbatim")
    with pytest.raises(ValueError):
        closed_classification_is(2, a, "j")
    with pytest.raises(ValueError):
        closed_classification_is(3, a, "r")  # n disagrees with a


# ---------------------------------------------------------------------------
# counting


def test_falling_factorial():
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 3) == 6
    assert falling_factorial(2, 3) == 0


def test_count_is3_rank2_frozen():
    report = count_is_classes(3, pp("1,2,-"))
    assert (report.p, report.all_singleton) == (2, False)
    assert report.singleton_literal == 21
    assert report.singleton_corrected == 22
    assert report.multi_class_count == 6
    assert report.size_lines == ((1, 2, 3), (2, 2, 3))
    assert report.singleton_corrected + 6 * 2 == 34
    assert report.enumerated_r.singleton_count == 22
    assert report.enumerated_l.singleton_count == 22
    assert report.flags == ("literal:singleton_count:r", "literal:singleton_count:l")


def test_count_is2_identity_frozen():
    report = count_is_classes(2, pp("1,2"))
    assert report.singleton_literal == 0
    assert report.singleton_corrected == 1
    assert report.multi_class_count == 3
    assert report.size_lines == ((1, 2, 2), (2, 2, 1))


def test_count_low_rank_all_singleton():
    for a_text in ("-,-", "1,-", "-,2"):
        report = count_is_classes(2, pp(a_text))
        assert report.all_singleton
        assert report.singleton_corrected == 7
        assert report.multi_class_count == 0
        assert report.enumerated_r.multi_class_count == 0
        assert report.flags == ()


def test_count_census_identity_all_a_is3():
    for a in enumerate_family(FAMILY_IS, 3):
        report = count_is_classes(3, a)
        if not report.all_singleton:
            covered = sum(count * size for _, size, count in report.size_lines)
            assert report.singleton_corrected + covered == 34
        assert not any(f.startswith("corrected:") for f in report.flags)
