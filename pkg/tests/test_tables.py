import math

import pytest

from subword_entropy.entropy import maxocc
from subword_entropy.occurrence import occ_runs
from subword_entropy.tables import FREQUENT_SUBWORDS, MINIMAL_WORDS, check_subword_rows, published_rows
from subword_entropy.words import text_runs


def test_rows_are_consistent():
    assert sorted(MINIMAL_WORDS) == list(range(1, 41))
    for n, (value, words) in MINIMAL_WORDS.items():
        assert all(len(w) == n for w in words)
        assert set(FREQUENT_SUBWORDS[n]) == set(words)
    assert len(MINIMAL_WORDS[3][1]) == len(MINIMAL_WORDS[19][1]) == len(MINIMAL_WORDS[28][1]) == 2


def test_row_nine():
    (row,) = published_rows(9, 9)
    assert row.as_dict() == {"n": 9, "word": "011000110", "maxocc": "16", "entropy_bits": "4.000", "per_letter": "0.444", "runs": 5}


@pytest.mark.parametrize("n", range(1, 41))
def test_listed_words_reach_listed_value(n):
    value, words = MINIMAL_WORDS[n]
    for w in words:
        assert maxocc(w).maxocc == value


def test_listed_subwords():
    # one entry at n = 18 is the reverse complement of a true most frequent subword
    assert check_subword_rows() == [(18, "011100100101110001", "010011001", 585)]
    assert occ_runs("011100100101110001", "011001101") == 588


def test_run_counts_match_table_examples():
    assert len(text_runs("011000110")) == 5
    assert len(text_runs("0110001110101000101011101010001110010110")) == 25
    assert published_rows(16, 16)[0].per_letter == pytest.approx(math.log2(252) / 16)
