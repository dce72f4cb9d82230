import itertools

import pytest
from hypothesis import given, strategies as st

from keyseries.permutation import Permutation, all_permutations, parse_permutation

perms = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.permutations(range(1, n + 1))
).map(Permutation)


def test_parse_digits_and_commas():
    assert parse_permutation("42531").values == (4, 2, 5, 3, 1)
    assert parse_permutation("4,2,5,3,1") == parse_permutation("42531")
    assert parse_permutation("10,2,3,4,5,6,7,8,9,1").n == 10


@pytest.mark.parametrize("bad", ["", "1224", "132 4", "0,1", "2,3"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_permutation(bad)


def test_core_ignores_fixed_tail():
    assert parse_permutation("21345") == parse_permutation("21")
    assert hash(parse_permutation("21345")) == hash(parse_permutation("21"))
    assert parse_permutation("21").one_line() == "21"


def test_values_beyond_rank_are_fixed():
    w = parse_permutation("321")
    assert w(5) == 5
    assert w.position(7) == 7


def test_length_and_longest():
    assert parse_permutation("42531").length() == 7
    for n in range(1, 6):
        assert Permutation.longest(n).length() == n * (n - 1) // 2
    assert Permutation.identity(4).length() == 0


def test_left_mul_swaps_values():
    w = parse_permutation("42531")
    assert w.left_mul_s(1).values == (4, 1, 5, 3, 2)
    assert w.left_mul_s(4).values == (5, 2, 4, 3, 1)


def test_ascent_matches_length_step():
    for w in all_permutations(4):
        for i in range(1, 4):
            grows = w.left_mul_s(i).length() == w.length() + 1
            assert w.is_ascent(i) == grows


def test_reduced_words_multiply_back():
    for w in all_permutations(4):
        for word in (w.reduced_word(), w.reduced_word_alt()):
            assert len(word) == w.length()
            assert Permutation.from_word(word) == w


def test_greedy_words_differ_for_braid():
    w = parse_permutation("321")
    assert w.reduced_word() != w.reduced_word_alt()
    assert parse_permutation("21").reduced_word() == (1,)


def test_all_permutations_distinct():
    group = list(all_permutations(4))
    assert len(group) == 24
    assert len({w.values for w in group}) == 24


@given(perms)
def test_inverse_roundtrip(w):
    assert w * w.inverse() == Permutation.identity(w.n)
    assert w.inverse().inverse() == w


@given(perms, perms)
def test_product_is_composition(u, v):
    m = max(u.n, v.n)
    prod = u * v
    for j in range(1, m + 1):
        assert prod(j) == u(v(j))


@given(perms)
def test_one_line_parse_roundtrip(w):
    assert parse_permutation(w.one_line()) == w
