"""Statements, vulnerability families, attacks, and both translation directions."""

from itertools import chain, combinations

import pytest
from hypothesis import given, settings, strategies as st

from setaflp.errors import BlowupCap
from setaflp.programs import Program, rule
from setaflp.setafs import Attack, validate_setaf
from setaflp.translate import (
    arguments,
    is_rfalp,
    minimal_transversals,
    nlp_to_setaf,
    rfalp_violations,
    setaf_to_nlp,
    statements,
    vul_family,
)

R1 = rule("a")
R2 = rule("b", pos="a")
R3 = rule("c", neg="c")
R4 = rule("d", pos="b", neg=["a", "d"])
R5 = rule("d", neg=["c", "d"])
R6 = rule("e", pos=["b", "c"], neg="e")
R7 = rule("c", pos="f", neg="g")
R8 = rule("f", pos=["c", "g"])
EX3 = Program([R1, R2, R3, R4, R5, R6, R7, R8])

EX2 = Program(
    [
        rule("a", neg="b"),
        rule("b", neg="a"),
        rule("c", neg=["a", "c"]),
        rule("c", neg=["c", "d"]),
        rule("d", neg="d"),
        rule("e", neg=["b", "e"]),
    ]
)


def fs(*items):
    return frozenset(frozenset(i) for i in items)


def test_statements_of_the_eight_rule_program():
    got = {(s.conc, s.rules, s.vul) for s in statements(EX3)}
    assert got == {
        ("a", frozenset([R1]), frozenset()),
        ("b", frozenset([R1, R2]), frozenset()),
        ("c", frozenset([R3]), frozenset("c")),
        ("d", frozenset([R1, R2, R4]), frozenset("ad")),
        ("d", frozenset([R5]), frozenset("cd")),
        ("e", frozenset([R1, R2, R3, R6]), frozenset("ce")),
    }


def test_statement_subderivations_are_recorded():
    by = {(s.conc, s.vul): s for s in statements(EX3)}
    s2 = by[("b", frozenset())]
    assert [sub.conc for sub in s2.subs] == ["a"]


def test_statements_of_an_atomic_program_are_its_rules():
    got = {(s.conc, s.rules, s.vul) for s in statements(EX2)}
    assert got == {(r.head, frozenset([r]), r.body_neg) for r in EX2.rules}


def test_arguments_drop_underivable_atoms():
    assert arguments(EX3) == frozenset("abcde")
    assert EX3.universe == frozenset("abcdefg")


def test_vul_family_of_the_eight_rule_program():
    assert vul_family(EX3) == {
        "a": fs(""),
        "b": fs(""),
        "c": fs("c"),
        "d": fs("ad", "cd"),
        "e": fs("ce"),
    }


def test_vul_family_with_a_compound_derivation():
    assert vul_family(EX2)["c"] == fs("ac", "cd")


def test_statement_blowup_cap():
    rules = [rule("u0")]
    for i in range(12):
        rules.append(rule(f"u{i + 1}", pos=[f"u{i}"]))
        rules.append(rule(f"u{i + 1}", pos=[f"u{i}"], neg="z"))
    doubling = Program(rules)
    with pytest.raises(BlowupCap):
        statements(doubling, max_statements=100)


def test_minimal_transversals_frozen_cases():
    assert minimal_transversals([frozenset("ad"), frozenset("cd")]) == fs("d", "ac")
    assert minimal_transversals([frozenset()]) == frozenset()
    assert minimal_transversals([]) == frozenset([frozenset()])
    assert minimal_transversals([frozenset("a"), frozenset("b")]) == fs("ab")
    assert minimal_transversals([frozenset("ab")]) == fs("a", "b")


def brute_transversals(family, alphabet):
    """Oracle: scan every subset of the alphabet for minimal hitting sets."""
    hitting = [
        frozenset(c)
        for n in range(len(alphabet) + 1)
        for c in combinations(sorted(alphabet), n)
        if all(frozenset(c) & member for member in family)
    ]
    return frozenset(h for h in hitting if not any(o < h for o in hitting))


@given(
    st.lists(
        st.sets(st.sampled_from("abcde"), max_size=5).map(frozenset), max_size=5
    )
)
@settings(max_examples=200)
def test_minimal_transversals_agree_with_brute_force(family):
    alphabet = set(chain.from_iterable(family))
    assert minimal_transversals(family) == brute_transversals(family, alphabet)


def test_transversal_outputs_form_an_antichain():
    got = minimal_transversals([frozenset("abc"), frozenset("cd"), frozenset("ab")])
    for x in got:
        for y in got:
            assert x == y or not x < y


def test_nlp_to_setaf_on_the_eight_rule_program():
    s = nlp_to_setaf(EX3)
    assert s.arguments == frozenset("abcde")
    assert set(s.sorted_attacks()) == {
        Attack(frozenset("c"), "c"),
        Attack(frozenset("c"), "e"),
        Attack(frozenset("e"), "e"),
        Attack(frozenset("d"), "d"),
        Attack(frozenset("ac"), "d"),
    }


def test_nlp_to_setaf_on_the_six_rule_program():
    s = nlp_to_setaf(EX2)
    assert s == validate_setaf(
        "abcde",
        [("a", "b"), ("b", "a"), ("b", "e"), ("c", "c"), ("d", "d"), ("e", "e"), ("ad", "c")],
    )


def test_vulnerabilities_outside_the_arguments_do_not_attack():
    # the only statement for a is vulnerable to b alone, and b never derives.
    p = Program([rule("a", neg="b")])
    s = nlp_to_setaf(p)
    assert s.arguments == frozenset("a")
    assert s.attacks == frozenset()


def test_setaf_to_nlp_reverses_fig1():
    fig1 = validate_setaf(
        "abcde",
        [("a", "b"), ("b", "a"), ("b", "e"), ("c", "c"), ("d", "d"), ("e", "e"), ("ad", "c")],
    )
    p = setaf_to_nlp(fig1)
    assert p == EX2
    assert is_rfalp(p)


def test_setaf_to_nlp_unattacked_argument_becomes_a_fact():
    s = validate_setaf("ab", [("a", "b")])
    assert setaf_to_nlp(s) == Program([rule("a"), rule("b", neg="a")])


def test_rfalp_violations_reports_each_clause():
    non_atomic = Program([rule("a", pos="b"), rule("b")])
    assert any("positive body" in v for v in rfalp_violations(non_atomic))
    headless = Program([rule("a")], universe=frozenset("ab"))
    assert any("no rule" in v for v in rfalp_violations(headless))
    subsumed = Program([rule("a", neg=["b", "c"]), rule("a", neg="b"), rule("b"), rule("c")])
    assert any("subsume" in v for v in rfalp_violations(subsumed))
    assert rfalp_violations(EX2) == []
    assert not is_rfalp(non_atomic)


@st.composite
def programs_st(draw):
    pool = sorted(draw(st.sets(st.sampled_from("abcd"), min_size=1, max_size=4)))
    rules = []
    for _ in range(draw(st.integers(0, 6))):
        head = draw(st.sampled_from(pool))
        pos = draw(st.sets(st.sampled_from(pool), max_size=2))
        neg = draw(st.sets(st.sampled_from(pool), max_size=2))
        rules.append(rule(head, pos, neg))
    return Program(rules, universe=frozenset(pool))


@given(programs_st())
@settings(max_examples=150)
def test_translation_always_yields_a_valid_setaf(p):
    s = nlp_to_setaf(p)
    assert s.arguments == arguments(p)
    for atk in s.attacks:
        assert atk.source <= s.arguments and atk.target in s.arguments
    # constructing through the validator again must not complain
    assert validate_setaf(s.arguments, [(a.source, a.target) for a in s.attacks]) == s


@given(programs_st())
@settings(max_examples=150)
def test_derived_program_is_always_rfalp(p):
    assert rfalp_violations(setaf_to_nlp(nlp_to_setaf(p))) == []


@given(programs_st())
@settings(max_examples=100)
def test_setaf_round_trip_is_identity(p):
    s = nlp_to_setaf(p)
    assert nlp_to_setaf(setaf_to_nlp(s)) == s
