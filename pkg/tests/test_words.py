import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subword_entropy.words import (
    RunTuple,
    Word,
    WordParseError,
    canonical_text,
    complement,
    from_runs,
    reverse,
    symmetry_class_representative,
    symmetry_orbit,
    to_runs,
    words_of_length,
)

binary = st.text(alphabet="01", max_size=40)


def test_run_tuple_of_example():
    rt = to_runs("0000110111001")
    assert rt == RunTuple(0, (4, 2, 1, 3, 2, 1))
    assert str(rt) == "0:4,2,1,3,2,1"
    assert rt.length == 13


def test_from_runs_formats():
    assert from_runs("0:4,2,1,3,2,1").text == "0000110111001"
    assert from_runs(1, [2, 1]).text == "110"
    assert from_runs(RunTuple(0, ())).text == ""


@pytest.mark.parametrize("bad, index", [("0120", 2), ("a", 0), ("01 ", 2)])
def test_parse_error_reports_index(bad, index):
    with pytest.raises(WordParseError) as info:
        Word(bad)
    assert info.value.index == index


@pytest.mark.parametrize("bad", ["2:1", "0:1,0", "0:x", "01"])
def test_bad_run_tuples(bad):
    with pytest.raises(WordParseError):
        RunTuple.parse(bad)


@given(binary)
def test_runs_round_trip(text):
    assert from_runs(to_runs(text)).text == text
    assert sum(to_runs(text).runs) == len(text)


@given(binary)
def test_code_round_trip(text):
    w = Word(text)
    assert Word.from_code(w.code, len(w)) == w


def test_word_is_immutable_and_picklable():
    w = Word("0110")
    with pytest.raises(AttributeError):
        w.text = "1"
    assert pickle.loads(pickle.dumps(w)) == w
    assert w[1:3] == Word("11") and w[0] == 0


def test_symmetries():
    assert complement("0011").text == "1100"
    assert reverse("0011").text == "1100"
    assert symmetry_orbit("001") == {"001", "110", "100", "011"}
    assert symmetry_class_representative("110").text == "001"


@given(binary)
def test_representative_is_orbit_minimum(text):
    rep = canonical_text(text)
    assert rep in symmetry_orbit(text)
    assert all(canonical_text(other) == rep for other in symmetry_orbit(text))


def test_words_of_length_order_and_count():
    words = [w.text for w in words_of_length(4)]
    assert len(words) == 8
    assert words == sorted(words)
    assert all(w.startswith("0") for w in words)
    with pytest.raises(ValueError):
        list(words_of_length(0))
    assert [w.text for w in words_of_length(0, allow_empty=True)] == [""]
