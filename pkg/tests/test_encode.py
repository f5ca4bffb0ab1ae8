import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hddlogic.encode import (Polarity, Word, double_bits, to_pulse_train, undouble_bits,
                             window_boundaries)
from hddlogic.errors import GeometryError, InvalidArgumentError, MalformedDoublingError

words = st.lists(st.sampled_from([0, 1]), min_size=1, max_size=12).map(lambda b: Word(tuple(b)))
guards = st.integers(1, 4)


def W(s):
    return Word.parse(s)


class TestWord:
    def test_parse_and_str(self):
        assert str(W("01101")) == "01101"
        assert int(W("1010")) == 10

    @pytest.mark.parametrize("text", ["", "012", "10a"])
    def test_rejects_non_binary(self, text):
        with pytest.raises(InvalidArgumentError):
            W(text)

    def test_padded_never_truncates(self):
        assert str(W("101").padded(5)) == "00101"
        assert str(W("101").padded(2)) == "101"


class TestDoubling:
    @pytest.mark.parametrize("word, doubled", [
        ("11010", "1111001100"),
        ("1010", "11001100"),
        ("0", "00"),
    ])
    def test_double(self, word, doubled):
        assert str(double_bits(word)) == doubled

    @pytest.mark.parametrize("doubled, word", [("11001100", "1010"), ("1111", "11")])
    def test_undouble(self, doubled, word):
        assert str(undouble_bits(doubled)) == word

    @pytest.mark.parametrize("bad", ["1001", "110", "01"])
    def test_undouble_malformed(self, bad):
        with pytest.raises(MalformedDoublingError):
            undouble_bits(bad)

    @given(words)
    def test_round_trip(self, w):
        assert undouble_bits(double_bits(w)) == w


class TestPulseTrain:
    def test_fig2a_profile(self):
        t = to_pulse_train("1010", Polarity.POSITIVE, g=1, amplitude=1.0)
        assert t.signs.tolist() == [-1, 1, -1, -1, -1, 1, -1, -1, -1, -1]

    def test_negative_is_mirror(self):
        pos = to_pulse_train("1001", Polarity.POSITIVE, 1, 0.8)
        neg = to_pulse_train("1001", Polarity.NEGATIVE, 1, 0.8)
        np.testing.assert_array_equal(neg.signs, -pos.signs)

    def test_guard_three(self):
        assert to_pulse_train("1", g=3).signs.tolist() == [-1, 1, -1, -1, -1, -1]

    def test_guard_must_be_positive(self):
        with pytest.raises(InvalidArgumentError):
            to_pulse_train("1", g=0)

    @given(words, guards)
    def test_length_and_baseline(self, w, g):
        for pol in Polarity:
            t = to_pulse_train(w, pol, g)
            assert len(t.signs) == len(w) * (1 + g) + 2
            base = -pol.value
            assert t.signs[0] == base and t.signs[-1] == base
            assert t.bit_count == len(w)

    @given(words, guards)
    def test_negation_involution(self, w, g):
        t = to_pulse_train(w, Polarity.NEGATIVE, g)
        np.testing.assert_array_equal(t.negated().negated().signs, t.signs)
        np.testing.assert_array_equal(t.negated().signs, to_pulse_train(w, Polarity.POSITIVE, g).signs)

    @given(words, guards)
    def test_window_transition_signature(self, w, g):
        signs = to_pulse_train(w, Polarity.POSITIVE, g).signs
        for i, bit in enumerate(w):
            start = 1 + i * (1 + g)
            window = signs[start - 1:start + 1 + g]  # includes the cell before the window
            changes = int(np.count_nonzero(np.diff(window)))
            assert changes == (2 if bit else 0)


def layout(bit_count, g):
    """Explicit per-half-cell labels: G guard, P pulse slot, Z window zero."""
    cells = ["G"]
    for i in range(bit_count):
        cells += [f"P{i}"] + [f"Z{i}"] * g
    return cells + ["G"]


class TestWindowBoundaries:
    @pytest.mark.parametrize("i, g, expected", [(0, 1, (1, 2)), (1, 1, (3, 4)), (1, 2, (4, 5))])
    def test_examples(self, i, g, expected):
        assert window_boundaries(i, g) == expected

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_against_layout(self, g):
        cells = layout(5, g)
        for i in range(5):
            pulse = cells.index(f"P{i}")
            assert window_boundaries(i, g) == (pulse, pulse + 1)

    def test_out_of_range(self):
        with pytest.raises(GeometryError):
            window_boundaries(4, 1, bit_count=4)
        with pytest.raises(GeometryError):
            window_boundaries(-1, 1)
