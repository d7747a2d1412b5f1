import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subword_entropy.occurrence import OccCache, occ_dp, occ_runs, pinned_run_placements
from subword_entropy.words import words_of_length


def brute_occ(w, u):
    return sum(1 for idx in itertools.combinations(range(len(w)), len(u)) if all(w[i] == c for i, c in zip(idx, u)))


@pytest.mark.parametrize(
    "w, u, expected",
    [
        ("011001", "01", 5),
        ("00110011", "01", 12),
        ("0000110111001", "0101", 78),
        ("0", "", 1),
        ("", "", 1),
        ("01", "011", 0),
        ("0000", "00", 6),
    ],
)
def test_known_counts(w, u, expected):
    assert occ_dp(w, u) == expected
    assert occ_runs(w, u) == expected


def test_dp_matches_enumeration():
    rng = random.Random(5)
    for _ in range(300):
        w = "".join(rng.choice("01") for _ in range(rng.randint(0, 10)))
        u = "".join(rng.choice("01") for _ in range(rng.randint(0, 5)))
        assert occ_dp(w, u) == brute_occ(w, u)


def test_runs_matches_dp_exhaustively_small():
    for n in range(1, 8):
        for w in itertools.product("01", repeat=n):
            w = "".join(w)
            for k in range(n + 1):
                for u in itertools.product("01", repeat=k):
                    u = "".join(u)
                    assert occ_runs(w, u) == occ_dp(w, u), (w, u)


def test_pinned_placements():
    # runs of sizes 2 and 3 with one letter in each end run
    assert pinned_run_placements(5, 2, 3, 2) == 6
    assert pinned_run_placements(4, 4, 4, 2, same_run=True) == 6


binary = st.text(alphabet="01", max_size=30)


@settings(max_examples=300)
@given(binary, st.text(alphabet="01", max_size=10))
def test_cache_threshold_does_not_change_counts(w, u):
    assert occ_runs(w, u, OccCache(0)) == occ_runs(w, u, OccCache(8)) == occ_dp(w, u)


@given(binary, binary, st.text(alphabet="01", max_size=4), st.text(alphabet="01", max_size=4))
def test_super_multiplicative(w1, w2, u1, u2):
    assert occ_dp(w1 + w2, u1 + u2) >= occ_dp(w1, u1) * occ_dp(w2, u2)


@given(binary, st.text(alphabet="01", max_size=6), st.sampled_from("01"))
def test_prefix_monotone(w, u, c):
    assert occ_dp(w + c, u) >= occ_dp(w, u)


def test_cache_records_hits():
    cache = OccCache(8)
    occ_runs("0011001100", "0101", cache)
    size = len(cache)
    assert size > 0
    occ_runs("0011001100", "0101", cache)
    assert cache.hits > 0 and len(cache) == size
    disabled = OccCache(0)
    occ_runs("0011001100", "0101", disabled)
    assert len(disabled) == 0


def test_rejects_bad_letters():
    with pytest.raises(ValueError):
        occ_runs("012", "0")
    with pytest.raises(ValueError):
        occ_dp("01", "x")
