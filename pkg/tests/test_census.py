from fractions import Fraction

import pytest

from braidbelts import EvenLength, HalfInt, TwistVector
from braidbelts._kernels import available_backends, evaluate_index_range
from braidbelts.census import (
    CSV_COLUMNS,
    census_by_length,
    census_by_max_sum,
    reached_classes,
    rows_to_csv,
    rows_to_json,
    rows_to_text,
)

from oracles import brute_evaluate


def classes(rows):
    return {(str(r.twist_class), r.knot_name) for r in rows}


@pytest.fixture(scope="module")
def length3():
    return census_by_length(3)


def test_table_one(length3):
    rows = [r for r in length3 if r.sum == HalfInt.of("3/2")]
    assert classes(rows) == {
        ("3/2 3/2 -3/2", "9_46"),
        ("3/2 1/2 -1/2", "unknot"),
        ("1/2 1/2 1/2", "3_1"),
    }


def test_table_two(length3):
    rows = [r for r in length3 if r.sum == HalfInt.of("1/2")]
    assert classes(rows) == {
        ("3/2 1/2 -3/2", "6_1"),
        ("3/2 -1/2 -1/2", "4_1"),
        ("1/2 1/2 -1/2", "unknot"),
    }


def test_negative_sums_are_mirrors(length3):
    neg = {r.twist_class.doubled: r for r in length3 if r.sum.doubled < 0}
    pos = {r.twist_class.doubled: r for r in length3 if r.sum.doubled > 0}
    assert len(neg) == len(pos) == 6
    for d, r in pos.items():
        m = neg[tuple(sorted((-x for x in d), reverse=True))]
        assert m.jones == r.jones.substitute_inverse()
    names = {r.knot_name for r in neg.values()}
    assert names == {"9_46*", "3_1*", "6_1*", "4_1", "unknot"}


def test_sum_filter():
    rows = census_by_length(3, total=HalfInt.of("-3/2"))
    assert classes(rows) == {
        ("3/2 -3/2 -3/2", "9_46*"),
        ("1/2 -1/2 -3/2", "unknot"),
        ("-1/2 -1/2 -1/2", "3_1*"),
    }


def test_even_length_rejected():
    with pytest.raises(EvenLength):
        census_by_length(4)


def test_no_charge_mixing_singles_out_trefoils(length3):
    kept = {str(r.twist_class) for r in length3 if r.no_charge_mixing}
    assert kept == {"1/2 1/2 1/2", "-1/2 -1/2 -1/2"}


def test_coordinate_bounds():
    n = 5
    states = evaluate_index_range(n, 0, 6**n)
    assert abs(states).max() <= n
    sums = set(states.sum(axis=1).tolist())
    assert sums <= set(range(-n, n + 1, 2))


def test_example_words_reach_their_class(length3):
    for r in length3:
        got = brute_evaluate(r.word_example.to_ints())
        assert tuple(sorted(got, reverse=True)) == r.twist_class.doubled
        assert len(r.word_example) == 3


def test_no_orbit_keeps_orderings():
    rows = census_by_length(3, orbit=False, total=HalfInt.of("1/2"))
    assert len(rows) == 3 + 6 + 3
    assert len({r.knot_name for r in rows}) == 3


def test_backends_agree():
    if len(available_backends()) < 2:
        pytest.skip("numba unavailable")
    assert reached_classes(5, backend_name="numba") == reached_classes(5, backend_name="numpy")


def test_rows_sorted_and_deterministic(length3):
    again = census_by_length(3)
    assert rows_to_csv(again) == rows_to_csv(length3)
    assert rows_to_json(again) == rows_to_json(length3)
    assert rows_to_text(again) == rows_to_text(length3)
    sums = [r.sum.doubled for r in length3]
    assert sums == sorted(sums, reverse=True)


def test_csv_layout(length3):
    lines = rows_to_csv(length3).splitlines()
    assert lines[0].split(",") == list(CSV_COLUMNS)
    assert len(lines) == 1 + len(length3)


class TestMaxSum:
    def test_small_bound(self):
        rows = census_by_max_sum(Fraction(3, 2))
        reps = {str(r.twist_class) for r in rows}
        assert "3/2 3/2 -3/2" in reps and "1/2 1/2 1/2" in reps
        assert "3/2 3/2 3/2" not in reps
        for r in rows:
            assert abs(r.sum.doubled) <= 3
            assert r.components == 1

    def test_contains_length3_census(self, length3):
        reps = {r.twist_class for r in census_by_max_sum(Fraction(3, 2))}
        assert {r.twist_class for r in length3} <= reps

    def test_unidentified_label(self):
        rows = census_by_max_sum(Fraction(5, 2))
        odd = [r for r in rows if r.knot_name is None]
        assert odd and all(r.knot_label == "unidentified" for r in odd)
        assert all(not r.jones.is_zero() for r in odd)

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            census_by_max_sum(2)
        with pytest.raises(ValueError):
            census_by_max_sum(Fraction(-1, 2))

    def test_example_word_is_canonical(self):
        for r in census_by_max_sum(Fraction(3, 2)):
            assert TwistVector(brute_evaluate(r.word_example.to_ints())) == r.twist_class
