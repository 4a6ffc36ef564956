import json

import pytest

from psmonoid.automata import (
    PAD,
    Nfa,
    PaddedPairSymbol,
    PairTransducer,
    find_partner,
    nfa_from_dict,
    pad_left,
    pad_right,
    padded_automaton,
    symbol_text,
    unpad,
)

P = PaddedPairSymbol


def test_pad_right_examples():
    assert pad_right((2, 1), (2, 1, 1)) == (P(2, 2), P(1, 1), P(PAD, 1))
    assert pad_right((1,), ()) == (P(1, PAD),)
    assert pad_right((), ()) == ()


def test_pad_left_examples():
    assert pad_left((2, 1), (2, 1, 1)) == (P(PAD, 2), P(2, 1), P(1, 1))
    assert pad_left((2,), (1, 2)) == (P(PAD, 1), P(2, 2))


def test_unpad_inverts_both_codings():
    for u, v in [((1, 2, 2), (1,)), ((), (3, 3)), ((2, 1), (2, 1))]:
        assert unpad(pad_right(u, v)) == (u, v)
        assert unpad(pad_left(u, v)) == (u, v)


def test_symbol_text():
    assert str(P(2, PAD)) == "(2,$)"
    assert symbol_text((2, 1)) == "e_21"
    assert symbol_text(None) == "ε"


def test_basic_constructors():
    assert Nfa.epsilon().accepts(())
    assert not Nfa.empty().accepts(())
    assert Nfa.empty().is_empty()
    w = Nfa.word((1, 2, 1))
    assert w.accepts((1, 2, 1)) and not w.accepts((1, 2))


def test_regular_operations():
    a, b = Nfa.symbol(1), Nfa.symbol(2)
    ab_star = a.concat(b).star()
    assert ab_star.words(4) == [(), (1, 2), (1, 2, 1, 2)]
    assert a.plus().words(3) == [(1,), (1, 1), (1, 1, 1)]
    assert a.union(b).words(1) == [(1,), (2,)]
    assert a.concat(b, b).reverse().words(3) == [(2, 2, 1)]


def test_determinize_and_minimal_preserve_language():
    lang = Nfa.symbol(1).star().concat(Nfa.symbol(2)).union(Nfa.symbol(1, 2).plus())
    expected = lang.words(5)
    d = lang.determinize()
    assert d.is_deterministic()
    assert d.words(5) == expected
    m = lang.minimal()
    assert m.is_deterministic() and m.words(5) == expected
    assert m.n_states <= d.n_states


def test_intersect():
    ones = Nfa.symbol(1).star()
    even = Nfa.symbol(1, 2).concat(Nfa.symbol(1, 2)).star()
    assert ones.intersect(even).words(4) == [(), (1, 1), (1, 1, 1, 1)]


def test_json_round_trip():
    a = Nfa.symbol(1).concat(Nfa.symbol(2).star()).minimal()
    data = json.loads(a.to_json())
    assert set(data) == {"states", "alphabet", "transitions", "initial", "accepting"}
    assert nfa_from_dict(json.loads(json.dumps(data))) == data
    assert data["alphabet"] == ["1", "2"]
    assert all(set(t) == {"from", "label", "to"} for t in data["transitions"])


def test_dot_uses_dollar_for_pad():
    a = Nfa.symbol(P(1, PAD))
    dot = a.to_dot("m")
    assert dot.startswith('digraph "m"') and "(1,$)" in dot


def test_transducer_accepts_and_outputs():
    t = PairTransducer.pair(1, 2).concat(PairTransducer.pair(None, 3))
    assert t.accepts((1,), (2, 3))
    assert not t.accepts((1,), (2,))
    assert t.outputs((1,)) == {(2, 3)}
    assert t.inverse().accepts((2, 3), (1,))


def test_transducer_compose():
    double = PairTransducer.homomorphism({1: (1, 1), 2: (2,)})
    swap = PairTransducer.homomorphism({1: (2,), 2: (1,)})
    both = double.compose(swap)
    assert both.accepts((1, 2), (2, 2, 1))
    assert both.outputs((2, 1, 1)) == {(1, 2, 2, 2, 2)}


def test_right_to_left_direction():
    # transitions spell (2, eps) then (1, 1), read from the right end
    t = PairTransducer.pair(2, None).concat(PairTransducer.pair(1, 1))
    t.direction = "rtl"
    assert t.accepts((1, 2), (1,))
    assert not t.accepts((2, 1), (1,))
    assert t.left_to_right().direction == "ltr"
    assert t.reversed_relation().accepts((2, 1), (1,))


def test_diagonal_and_projections():
    lang = Nfa.symbol(2).star().concat(Nfa.symbol(1))
    d = PairTransducer.diagonal(lang)
    assert d.accepts((2, 2, 1), (2, 2, 1))
    assert not d.accepts((2, 1), (2, 2, 1))
    assert d.domain().words(3) == lang.words(3)
    assert d.image().words(3) == lang.words(3)


def test_padded_automaton_both_codings():
    # u -> u . 3 on the alphabet {1, 2}
    copy = PairTransducer.pair(1, 1).union(PairTransducer.pair(2, 2)).star()
    rel = copy.concat(PairTransducer.pair(None, 3))
    right = padded_automaton(rel, "right", 2)
    left = padded_automaton(rel, "left", 2)
    for u in [(), (1,), (2, 1), (1, 1, 2)]:
        v = u + (3,)
        assert right.accepts(pad_right(u, v))
        assert left.accepts(pad_left(u, v))
        assert not right.accepts(pad_right(u, u))
    assert find_partner(right.minimal(), (2, 1)) == (2, 1, 3)


def test_padded_automaton_rejects_unknown_coding():
    with pytest.raises(ValueError):
        padded_automaton(PairTransducer.identity(), "up")
