import pytest

from approxre.automata import (
    bounded_equiv,
    build_dfa,
    build_nfa,
    from_table,
    merged_edges,
    run,
    stats,
    to_dot,
    to_table,
    witness_difference,
)
from approxre.comparison import hamming
from approxre.derivation import DerivationSession
from approxre.errors import AlphabetError, ParseError
from approxre.expr import EMPTY, EPSILON, all_words, approx, concat, star, sym, to_str, union
from approxre.generate import PopulationConfig, population

from strategies import COSTS_AB

a, b, c = sym("a"), sym("b"), sym("c")
H = hamming("abc")
F = concat(star(b), union(a, b), star(c))
E = approx(H, 1, F)


def test_hamming_dfa(abc):
    m = build_dfa(E, abc)
    assert m.num_states == 6
    assert len(m.finals) == 5 and 0 not in m.finals
    assert m.initial == {0}
    assert m.deterministic and m.is_structurally_deterministic()
    assert m.terms[0] == E
    assert set(m.terms) == {abc.brz_derive_word(E, w) for w in all_words("abc", 3)} - {EMPTY}


def test_hamming_nfa(abc):
    m = build_nfa(E, abc)
    assert m.num_states == 4
    assert set(m.terms) == {E, approx(H, 0, F), approx(H, 1, star(c)), approx(H, 0, star(c))}
    finals = {m.terms[i] for i in m.finals}
    assert finals == {approx(H, 1, star(c)), approx(H, 0, star(c))}
    assert not m.deterministic


def test_hamming_nfa_edges(abc):
    m = build_nfa(E, abc)
    idx = {to_str(t): i for i, t in enumerate(m.terms)}
    e, f0, c1, c0 = (idx[k] for k in ("H{1}(b*(a+b)c*)", "H{0}(b*(a+b)c*)", "H{1}(c*)", "H{0}(c*)"))
    assert merged_edges(m) == {
        (e, e): ["b"],
        (e, f0): ["a", "c"],
        (e, c1): ["a", "b"],
        (e, c0): ["a", "b", "c"],
        (f0, f0): ["b"],
        (f0, c0): ["a", "b"],
        (c1, c1): ["c"],
        (c1, c0): ["a", "b"],
        (c0, c0): ["c"],
    }


def test_trivial_automata():
    s = DerivationSession("a")
    nil_dfa = build_dfa(EMPTY, s)
    assert nil_dfa.num_states == 1 and not nil_dfa.finals and not nil_dfa.transitions
    complete = build_dfa(EMPTY, s, sink=True)
    assert complete.transitions == ((0, "a", 0),)
    full = build_dfa(a, s, sink=True)
    assert full.num_states == 3
    assert [full.terms[i] for i in full.finals] == [EPSILON]
    assert build_dfa(a, s).num_states == 2
    nil_nfa = build_nfa(EMPTY, s)
    assert nil_nfa.num_states == 1 and not nil_nfa.finals and not nil_nfa.transitions


def test_nfa_union(ab):
    m = build_nfa(union(a, b), ab)
    eps = m.terms.index(EPSILON)
    assert m.successors(0, "a") == {eps} and m.successors(0, "b") == {eps}


def test_run(abc):
    dfa, nfa = build_dfa(E, abc), build_nfa(E, abc)
    assert run(dfa, "bba")
    assert not run(nfa, "")
    with pytest.raises(AlphabetError):
        run(dfa, "bz")


def test_bounded_equiv(abc):
    dfa, nfa = build_dfa(E, abc), build_nfa(E, abc)
    assert bounded_equiv(dfa, nfa, 6)
    assert bounded_equiv(dfa, dfa, 4)
    s = DerivationSession("ab")
    da, db = build_dfa(a, s), build_dfa(b, s)
    assert not bounded_equiv(da, db, 1)
    assert witness_difference(da, db, 3) == "a"
    assert witness_difference(dfa, nfa, 5) is None
    with pytest.raises(AlphabetError):
        bounded_equiv(da, dfa, 2)


def test_dot(abc):
    dot = to_dot(build_dfa(E, abc))
    assert dot.startswith("digraph A {")
    assert dot.count("[shape=circle") + dot.count("[shape=doublecircle") == 6
    assert dot.count("doublecircle") == 5
    assert "__start0 -> q0;" in dot
    assert 'label="H{1}(b*(a+b)c*)"' in dot
    nfa_dot = to_dot(build_nfa(E, abc))
    assert nfa_dot.count("doublecircle") == 2
    nil_dot = to_dot(build_dfa(EMPTY, DerivationSession("a")))
    assert nil_dot.count("shape=circle") == 1 and "doublecircle" not in nil_dot
    # byte-stable across fresh sessions
    assert dot == to_dot(build_dfa(E, DerivationSession("abc")))


def test_table_roundtrip(abc):
    for m in (build_dfa(E, abc), build_nfa(E, abc)):
        text = to_table(m)
        back = from_table(text)
        assert to_table(back) == text
        assert bounded_equiv(m, back, 5)
    assert to_table(build_dfa(E, abc)).splitlines()[0] == "dfa 6 abc"


@pytest.mark.parametrize("text", ["", "nfa x ab\n", "dfa 1 a\n0 a 0\n", "dfa 1 a\n0 a\ninitial: 0\nfinal:\n",
                                  "dfa 1 a\ninitial: 3\nfinal:\n"])
def test_table_errors(text):
    with pytest.raises(ParseError):
        from_table(text)


def test_stats(abc):
    assert stats(build_dfa(E, abc)) == {"states": 6, "transitions": 16, "finals": 5, "initial": 1}


def test_automata_match_derivatives():
    pop = population(PopulationConfig(costs=COSTS_AB, size=120, seed=7))
    for e in pop:
        s = DerivationSession("ab")
        dfa, nfa = build_dfa(e, s), build_nfa(e, s)
        assert dfa.is_structurally_deterministic()
        assert bounded_equiv(dfa, nfa, 6)
        for w in all_words("ab", 5):
            assert run(dfa, w) == s.match_brz(e, w)
            assert run(nfa, w) == s.match_ant(e, w)
