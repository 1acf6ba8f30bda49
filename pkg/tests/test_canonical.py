import itertools

import pytest
from hypothesis import given

from braidbelts import (
    NonOrientable,
    NotPure,
    TwistVector,
    ZERO,
    braid_only_word,
    canonical_pretty,
    coset_rep,
    evaluate_word,
    is_orientable,
    is_pure_belt,
    parse_twist,
    parse_word,
    pure_exponents,
)
from braidbelts.canonical import coset_candidates

from oracles import all_words, brute_evaluate
from strategies import twists


def tv(text):
    return parse_twist(text)


def orientable_box(bound):
    for d in itertools.product(range(-bound, bound + 1), repeat=3):
        t = TwistVector(d)
        if is_orientable(t):
            yield t


class TestCosetRep:
    def test_integer_example(self):
        assert coset_rep(tv("2 4 3")).word == parse_word("-1 -2")
        assert evaluate_word(parse_word("-1 -2"), tv("2 4 3")) == tv("2 2 4")

    def test_half_odd_example(self):
        assert coset_rep(tv("7/2 1/2 3/2")).word == parse_word("-3")
        assert evaluate_word(parse_word("-3"), tv("7/2 1/2 3/2")) == tv("1 1 3")

    def test_already_pure(self):
        assert coset_rep(tv("1 1 1")).word == parse_word("")

    def test_rejects_mixed(self):
        with pytest.raises(NonOrientable):
            coset_rep(tv("1 1 1/2"))

    def test_unique_candidate(self):
        for t in orientable_box(8):
            hits = [c for c in coset_candidates(t) if is_pure_belt(evaluate_word(c, t))]
            assert len(hits) == 1, t


class TestPureExponents:
    @pytest.mark.parametrize(
        "text,expected",
        [("2 2 4", (2, 3, 3)), ("1 1 3", (1, 2, 2)), ("0 0 0", (0, 0, 0)), ("-3 1 -1", (-1, 0, -2))],
    )
    def test_values(self, text, expected):
        assert pure_exponents(tv(text)).as_tuple() == expected

    def test_not_pure(self):
        with pytest.raises(NotPure):
            pure_exponents(tv("2 4 3"))
        with pytest.raises(NotPure):
            pure_exponents(tv("1/2 1/2 1/2"))


class TestBraidOnlyWord:
    @pytest.mark.parametrize(
        "text,word",
        [
            ("2 4 3", "σ₂σ₁⁵σ₂⁶σ₃⁶"),
            ("7/2 1/2 3/2", "σ₃σ₁²σ₂⁴σ₃⁴"),
            ("0 0 0", "1"),
        ],
    )
    def test_worked_examples(self, text, word):
        assert braid_only_word(tv(text)).pretty() == word

    @pytest.mark.parametrize(
        "text,word",
        [
            ("2 4 3", "σ₂σ₁⁵σ₂⁶σ₃⁶"),
            ("7/2 1/2 3/2", "σ₃σ₁²σ₂⁴σ₃⁴"),
            ("3/2 3/2 3/2", "σ₁σ₂σ₁σ₁²σ₂²σ₃²"),
            ("0 0 0", "1"),
        ],
    )
    def test_canonical_pretty(self, text, word):
        assert canonical_pretty(tv(text)) == word

    def test_half_twist_example(self):
        # (σ₁σ₂σ₁)σ₁²σ₂²σ₃² without merging the runs
        assert str(braid_only_word(tv("3/2 3/2 3/2"))) == "1 2 1 1 1 2 2 3 3"

    def test_negative_exponents_use_inverse_letters(self):
        word = braid_only_word(tv("-2 -2 -4"))
        assert str(word) == "-1 -1 -1 -1 -2 -2 -2 -2 -2 -2 -3 -3 -3 -3 -3 -3"

    def test_round_trip_box(self):
        for t in orientable_box(10):
            assert evaluate_word(braid_only_word(t), ZERO) == t

    @given(twists)
    def test_round_trip_random(self, t):
        if not is_orientable(t):
            with pytest.raises(NonOrientable):
                braid_only_word(t)
            return
        word = braid_only_word(t)
        assert brute_evaluate(word.to_ints()) == t.doubled
        # canonical form is a fixed point
        assert braid_only_word(evaluate_word(word)) == word

    def test_pure_words_have_even_length(self):
        for t in orientable_box(8):
            if is_pure_belt(t):
                assert len(braid_only_word(t)) % 2 == 0

    def test_no_word_reaches_mixed_parity(self):
        for length in range(7):
            for tokens in all_words(length):
                assert is_orientable(TwistVector(brute_evaluate(tokens)))
