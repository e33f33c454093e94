import random

import pytest

from reynolds.algebra import apply_p
from reynolds.enumeration import (
    count_words,
    enumerate_reynolds_words,
    enumerate_words,
    oracle_p,
    random_reynolds_word,
    random_word,
    reynolds_counts,
    words_by_size,
)
from reynolds.forests import has_super_crown, word_to_forest
from reynolds.words import NotReynoldsError, is_reynolds_word, parse, size

# frozen from brute-force generation, cross-checked by reynolds_count_dp below
WORDS_X = [1, 2, 6, 22, 90, 394, 1806, 8558]
REYNOLDS_X = [1, 2, 6, 21, 80, 323, 1360, 5908]
REYNOLDS_XY = [1, 3, 12, 56, 286, 1550]
REYNOLDS_XYZ = [1, 4, 20, 115, 722]


def reynolds_count_dp(k: int, max_size: int) -> list[int]:
    """Count Reynolds words without generating them.

    A Reynolds word is any sequence of Reynolds atoms: letters, or [u] with
    u Reynolds and not a product of two or more brackets.
    """
    total, prime = [1], [1]
    bracket_seqs = [1]  # sequences of Reynolds bracket atoms
    for n in range(1, max_size + 1):
        bracket_atom = lambda j: prime[j - 1]  # noqa: E731
        atom = lambda j: bracket_atom(j) + (k if j == 1 else 0)  # noqa: E731
        total.append(sum(atom(j) * total[n - j] for j in range(1, n + 1)))
        bracket_seqs.append(sum(bracket_atom(j) * bracket_seqs[n - j] for j in range(1, n + 1)))
        at_least_two = bracket_seqs[n] - bracket_atom(n)
        prime.append(total[n] - at_least_two)
    return total


class TestEnumerateWords:
    def test_size_zero(self):
        assert enumerate_words(["x"], 0) == [parse("1")]

    def test_size_one(self):
        assert [str(w) for w in enumerate_words(["x"], 1)] == ["1", "[]", "x"]

    def test_size_two(self):
        got = {str(w) for w in words_by_size(["x"], 2)[2]}
        assert got == {"x x", "[x]", "[[]]", "x []", "[] x", "[] []"}

    def test_order_and_sizes(self):
        ws = enumerate_words(["x", "y"], 4)
        keys = [(size(w), str(w)) for w in ws]
        assert keys == sorted(keys)
        assert len(set(ws)) == len(ws)

    def test_counts_match_recurrence(self):
        levels = words_by_size(["x"], 7)
        assert [len(level) for level in levels] == count_words(1, 7) == WORDS_X
        levels = words_by_size(["x", "y"], 5)
        assert [len(level) for level in levels] == count_words(2, 5)

    def test_bad_args(self):
        with pytest.raises(ValueError):
            enumerate_words([], 2)
        with pytest.raises(ValueError):
            enumerate_words(["x"], -1)


class TestReynoldsWords:
    def test_all_small_words_are_reynolds(self):
        assert enumerate_reynolds_words(["x"], 2) == enumerate_words(["x"], 2)
        assert len(enumerate_words(["x"], 2)) == 9

    def test_first_exclusion(self):
        ws = enumerate_reynolds_words(["x"], 3)
        assert parse("[[] []]") not in ws
        assert parse("[[] []]") in enumerate_words(["x"], 3)

    def test_frozen_counts(self):
        assert reynolds_counts(["x"], 7) == REYNOLDS_X
        assert reynolds_counts(["x", "y"], 5) == REYNOLDS_XY
        assert reynolds_counts(["x", "y", "z"], 4) == REYNOLDS_XYZ

    def test_dp_oracle(self):
        assert reynolds_count_dp(1, 7) == REYNOLDS_X
        assert reynolds_count_dp(2, 5) == REYNOLDS_XY
        assert reynolds_count_dp(3, 4) == REYNOLDS_XYZ

    def test_monotone(self):
        assert all(a < b for a, b in zip(REYNOLDS_X, REYNOLDS_X[1:]))

    def test_filter_matches_forests(self):
        for w in enumerate_words(["x", "y"], 4):
            assert is_reynolds_word(w) == (not has_super_crown(word_to_forest(w)))


class TestOracle:
    def test_letter(self):
        assert oracle_p(parse("x")) == apply_p(parse("x"))

    def test_two_brackets(self):
        assert oracle_p(parse("[x] [y]")) == apply_p(parse("[x] [y]"))

    def test_agrees_on_small_grid(self):
        for w in enumerate_reynolds_words(["x", "y"], 4):
            assert oracle_p(w) == apply_p(w), w

    def test_rejects_non_reynolds(self):
        with pytest.raises(NotReynoldsError):
            oracle_p(parse("[[x] [y]]"))


def test_random_words():
    rng = random.Random(1)
    for n in range(8):
        assert size(random_word(rng, "xy", n)) == n
    for _ in range(50):
        w = random_reynolds_word(rng, "xyz", 6)
        assert is_reynolds_word(w) and size(w) <= 6


def test_random_words_reproducible():
    a = [random_reynolds_word(random.Random(5), "xy", 6) for _ in range(3)]
    b = [random_reynolds_word(random.Random(5), "xy", 6) for _ in range(3)]
    assert a == b
