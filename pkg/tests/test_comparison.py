import functools
import itertools

import pytest
from hypothesis import given, strategies as st

from approxre.comparison import (
    BOT,
    EPS,
    CostFunction,
    cost_common_target,
    cost_lookup,
    cost_reverse,
    cost_symmetrize,
    ext_add,
    ext_min,
    ext_sub,
    format_cost_text,
    format_ext,
    hamming,
    levenshtein,
    load_cost_file,
    parse_cost_text,
    seq_compare,
    subword,
    within,
    word_compare,
    zero_insertion_symbols,
)
from approxre.errors import AlphabetError, CostFileError
from approxre.expr import all_words

ext = st.one_of(st.none(), st.integers(0, 50))


def test_ext_add():
    assert ext_add(BOT, 3) is BOT
    assert ext_add(3, BOT) is BOT
    assert ext_add(0, 0) == 0
    assert ext_add(4, 3) == 7


def test_ext_sub():
    assert ext_sub(2, 5) is BOT
    assert ext_sub(3, 0) == 3
    assert ext_sub(1, BOT) is BOT
    assert ext_sub(BOT, 1) is BOT
    assert ext_sub(5, 5) == 0


@given(ext)
def test_ext_absorbing(x):
    assert ext_add(x, BOT) is BOT
    assert ext_sub(BOT, x) is BOT
    if x is not BOT:
        assert ext_sub(x, x) == 0


def test_min_and_budget():
    assert ext_min([BOT, 4, 2]) == 2
    assert ext_min([BOT, BOT]) is BOT
    assert ext_min([]) is BOT
    assert within(0, 0) and within(1, 2)
    assert not within(BOT, 3)
    assert not within(1, BOT)
    assert not within(3, 2)
    assert format_ext(BOT) == "bot" and format_ext(7) == "7"


def test_lookup(C):
    assert cost_lookup(C, "a", "c") == 4
    assert cost_lookup(C, "b", "b") == 0
    assert cost_lookup(C, "b", "a") is BOT
    assert C(EPS, EPS) == 0
    with pytest.raises(AlphabetError):
        cost_lookup(C, "a", "z")


def test_condition_one_enforced():
    with pytest.raises(CostFileError):
        CostFunction("X", "ab", {("a", "a"): 1})
    with pytest.raises(AlphabetError):
        CostFunction("X", "ab", {("a", "z"): 1})
    with pytest.raises(CostFileError):
        CostFunction("X", "ab", {("a", "b"): -1})


def test_reverse(C):
    r = cost_reverse(C)
    assert r("c", "a") == 4
    assert r("b", "a") == 1
    assert r.name == "C.rev"
    assert cost_reverse(r).entries == C.entries


def test_symmetrize(C):
    s = cost_symmetrize(C)
    assert s("a", "c") == 3
    assert s("b", "a") == 1
    for x in s.symbols():
        assert s(x, x) == 0
    for x, y in itertools.product(s.symbols(), repeat=2):
        assert s(x, y) == s(y, x)


def test_common_target(C):
    t = cost_common_target(C)
    assert t("a", "c") == 2
    assert t("b", "b") == 0
    for x in t.symbols():
        assert t(x, x) == 0


def test_combinator_sequence_values(C):
    s, t = ("a", "c", "a"), ("c", "a", "c")
    assert seq_compare(C, s, t) == 11
    assert seq_compare(cost_reverse(C), s, t) == 10
    assert seq_compare(cost_symmetrize(C), s, t) == 9
    assert seq_compare(cost_common_target(C), s, t) == 6


def test_seq_compare_size_mismatch(C):
    with pytest.raises(ValueError):
        seq_compare(C, ("a",), ("a", "b"))
    assert seq_compare(C, ("b", EPS), ("a", EPS)) is BOT


def test_word_compare_examples(H3, C):
    assert word_compare(levenshtein("ab"), "aba", "abaa") == 1
    assert word_compare(H3, "ab", "abb") is BOT
    assert word_compare(C, "", "") == 0
    with pytest.raises(AlphabetError):
        word_compare(H3, "az", "ab")


def test_zero_insertion_symbols():
    assert zero_insertion_symbols(hamming("ab")) == frozenset()
    assert zero_insertion_symbols(levenshtein("ab")) == frozenset()
    c = CostFunction("Z", "ab", {(EPS, "a"): 0, (EPS, "b"): 1})
    assert zero_insertion_symbols(c) == {"a"}


@given(st.text("abc", max_size=5))
def test_self_distance_zero(w):
    for c in (hamming("abc"), levenshtein("abc"), subword("abc")):
        assert word_compare(c, w, w) == 0


def test_hamming_counts_mismatches():
    h = hamming("ab")
    words = list(all_words("ab", 4))
    for u in words:
        for v in words:
            d = word_compare(h, u, v)
            if len(u) != len(v):
                assert d is BOT
            else:
                assert d == sum(x != y for x, y in zip(u, v))


def textbook_edit_distance(u, v):
    @functools.lru_cache(None)
    def go(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return min(go(i - 1, j) + 1, go(i, j - 1) + 1, go(i - 1, j - 1) + (u[i - 1] != v[j - 1]))
    return go(len(u), len(v))


def test_levenshtein_is_edit_distance():
    lev = levenshtein("ab")
    words = list(all_words("ab", 4))
    for u in words:
        for v in words:
            assert word_compare(lev, u, v) == textbook_edit_distance(u, v)


def is_subword(w, w2):
    it = iter(w2)
    return all(ch in it for ch in w)


def test_subword_function():
    d = subword("ab")
    words = list(all_words("ab", 4))
    for w2 in words:
        for w in words:
            expected = len(w2) - len(w) if is_subword(w, w2) else BOT
            assert word_compare(d, w, w2) == expected


def test_cost_file_roundtrip(data_dir, C):
    loaded = load_cost_file(data_dir / "asym.cost", "C")
    assert loaded == C
    assert parse_cost_text(format_cost_text(loaded), "C") == loaded


def test_cost_file_eps_and_comments():
    c = parse_cost_text("# leading comment\nalphabet: a b\neps a 1\n# x\nb eps 2\n", "Q")
    assert c(EPS, "a") == 1 and c("b", EPS) == 2 and c("a", "b") is BOT


@pytest.mark.parametrize("text", [
    "a b 1\n",
    "alphabet:\n",
    "alphabet: a b\na a 1\n",
    "alphabet: a b\na z 1\n",
    "alphabet: a b\na b x\n",
    "alphabet: a b\na b 1\na b 2\n",
    "alphabet: a b\na b\n",
    "alphabet: ab\n",
    "",
])
def test_cost_file_errors(text):
    with pytest.raises(CostFileError):
        parse_cost_text(text, "bad")
