import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from insets.core import inset
from insets.errors import CapExceededError
from insets.words import count_bruteforce, enumerate_words, is_satisfying

WORDS_0_3_2 = {"221", "212", "122", "220", "202", "022"}
WORDS_1_3_2 = {
    "1022", "1122", "1202", "1212", "1220", "1221", "2200", "2211", "2210",
    "2201", "2020", "2121", "2021", "2120", "2002", "2112", "2012", "2102",
}
WORDS_1_3_3 = {"1222", "2122", "2022", "2212", "2202", "2221", "2220"}
WORDS_2_3_4 = {
    "12222", "21222", "22122", "22212", "22221", "22220", "22202", "22022",
}


@pytest.mark.parametrize(
    "constraint,expected",
    [
        ((0, 3, 2), WORDS_0_3_2),
        ((1, 3, 2), WORDS_1_3_2),
        ((1, 3, 3), WORDS_1_3_3),
        ((2, 3, 4), WORDS_2_3_4),
    ],
)
def test_known_word_lists(constraint, expected):
    assert set(enumerate_words(*constraint)) == expected


def test_empty_constraint_yields_empty_word():
    assert enumerate_words(0, 0, 0) == [""]


def test_lexicographic_order():
    for m, n, k in [(0, 3, 2), (1, 3, 2), (2, 3, 4), (2, 2, 1)]:
        listing = enumerate_words(m, n, k)
        assert all(a < b for a, b in zip(listing, listing[1:]))


def test_counts_match_inset_and_bruteforce():
    for total in range(9):
        for m in range(total + 1):
            n = total - m
            for k in range(total + 2):
                expected = inset(m, n, k)
                assert len(enumerate_words(m, n, k)) == expected
                assert count_bruteforce(m, n, k) == expected


def test_partition_over_k():
    for total in range(8):
        for m in range(total + 1):
            n = total - m
            assert (
                sum(len(enumerate_words(m, n, k)) for k in range(total + 1))
                == 2**m * 3**n
            )


@pytest.mark.parametrize(
    "word,constraint,expected",
    [
        ("1022", (1, 3, 2), True),
        ("0122", (1, 3, 2), False),
        ("122", (1, 3, 2), False),
        ("", (0, 0, 0), True),
        ("1x2", (1, 2, 1), False),
    ],
)
def test_is_satisfying(word, constraint, expected):
    assert is_satisfying(word, *constraint) is expected


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        enumerate_words(11, 10, 3)
    # configurable
    assert enumerate_words(2, 1, 1, cap=3)


def test_bruteforce_cap():
    with pytest.raises(CapExceededError):
        count_bruteforce(8, 7, 3)
    assert count_bruteforce(2, 1, 1, cap=3) == inset(2, 1, 1)


def test_negative_constraint_rejected():
    with pytest.raises(ValueError):
        enumerate_words(1, 2, -1)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 9))
def test_enumerated_words_satisfy(m, n, k):
    listing = enumerate_words(m, n, k)
    assert len(listing) == inset(m, n, k)
    assert len(set(listing)) == len(listing)
    for word in listing:
        assert is_satisfying(word, m, n, k)
