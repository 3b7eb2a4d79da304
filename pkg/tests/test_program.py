import pytest
from hypothesis import given, settings

import naive
from rangesem.errors import CapExceededError
from rangesem.program import (
    Clause,
    NormalProgram,
    entails,
    facts,
    format_program,
    gl_reduce,
    is_classical_model,
    is_p_stable,
    is_stable_model,
    is_supported_model,
    least_model,
    minimal_models,
    p_stable_models,
    parse_program,
    red_reduce,
    stable_models,
    supported_models,
    two_valued_models,
)

from conftest import programs


def prog(atoms, *rules):
    """``prog("ab", ("b", "", "a"))`` is ``{b <- not a}`` over {a, b}."""
    atoms = tuple(atoms) if not isinstance(atoms, tuple) else atoms
    return NormalProgram.from_rules(atoms, [(h, tuple(p), tuple(q)) for h, p, q in rules])


def names(p, models):
    return [set(p.names_of(m)) for m in models]


EMPTY = NormalProgram()
EMPTY_A = NormalProgram(("a",))
B_NOT_A = prog("ab", ("b", "", "a"))
A_NOT_B = prog("ab", ("a", "", "b"))
EVEN_LOOP = prog("ab", ("a", "", "b"), ("b", "", "a"))
A_LOOP = prog("a", ("a", "a", ""))


def test_facts():
    assert facts(EMPTY) == 0
    p = prog("ab", ("a", "", ""), ("b", "a", ""))
    assert names(p, [facts(p)]) == [{"a"}]


def test_classical_model_examples():
    assert is_classical_model(EMPTY_A, 1)
    assert not is_classical_model(B_NOT_A, 0)
    assert is_classical_model(B_NOT_A, B_NOT_A.mask("a"))


def test_two_valued_models_examples():
    assert names(EMPTY_A, two_valued_models(EMPTY_A)) == [set(), {"a"}]
    assert names(B_NOT_A, two_valued_models(B_NOT_A)) == [{"a"}, {"b"}, {"a", "b"}]


def test_minimal_models_examples():
    assert names(EMPTY_A, minimal_models(EMPTY_A)) == [set()]
    assert names(EVEN_LOOP, minimal_models(EVEN_LOOP)) == [{"a"}, {"b"}]
    definite = prog("ab", ("a", "", ""), ("b", "a", ""))
    assert names(definite, minimal_models(definite)) == [{"a", "b"}]


def test_least_model_examples():
    assert least_model(EMPTY) == 0
    p = prog("abcd", ("a", "", ""), ("b", "a", ""), ("c", "d", ""))
    assert set(p.names_of(least_model(p))) == {"a", "b"}
    assert least_model(A_LOOP) == 0
    with pytest.raises(ValueError):
        least_model(B_NOT_A)


def test_gl_reduce_examples():
    p = prog(("def(a)", "def(b)"), ("def(b)", "", ["def(a)"]))
    assert format_program(gl_reduce(p, 0)) == "% sig: def(a) def(b)\ndef(b).\n"
    assert gl_reduce(p, p.mask(["def(a)"])).clauses == frozenset()
    assert gl_reduce(p, 0).atoms == p.atoms


def test_red_reduce_examples():
    p = prog(("def(a)", "def(b)"), ("def(b)", "", ["def(a)"]))
    assert format_program(red_reduce(p, 0)) == "% sig: def(a) def(b)\ndef(b).\n"
    assert red_reduce(p, p.mask(["def(a)"])) == p
    q = prog("abcd", ("c", "a", "bd"))
    assert format_program(red_reduce(q, q.mask("b"))) == "% sig: a b c d\nc :- a, not b.\n"


def test_stable_examples():
    assert is_stable_model(A_NOT_B, A_NOT_B.mask("a"))
    assert not is_stable_model(A_NOT_B, A_NOT_B.mask("b"))
    assert is_stable_model(A_LOOP, 0)
    assert names(EVEN_LOOP, stable_models(EVEN_LOOP)) == [{"a"}, {"b"}]
    assert stable_models(EMPTY) == [0]
    odd = prog("abc", ("b", "", "a"), ("c", "", "b"), ("a", "", "c"))
    assert stable_models(odd) == []


def test_entails_examples():
    assert entails(EMPTY, 0)
    fact = prog("a", ("a", "", ""))
    assert entails(fact, 1)
    a = prog("ab", ("a", "", "b"))
    assert not entails(a, a.mask("a"))


def test_p_stable_examples():
    assert is_p_stable(A_NOT_B, A_NOT_B.mask("a"))
    assert not is_p_stable(A_NOT_B, A_NOT_B.mask("b"))
    assert is_p_stable(EMPTY, 0)
    assert names(EVEN_LOOP, p_stable_models(EVEN_LOOP)) == [{"a"}, {"b"}]
    assert p_stable_models(EMPTY_A) == [0]


def test_supported_examples():
    assert is_supported_model(B_NOT_A, B_NOT_A.mask("b"))
    assert is_supported_model(EMPTY_A, 0)
    assert is_supported_model(A_LOOP, 1)
    assert supported_models(EMPTY_A) == [0]
    assert not is_supported_model(B_NOT_A, B_NOT_A.mask("ab"))


def test_cap_is_enforced():
    big = NormalProgram(tuple(f"x{i}" for i in range(21)))
    for fn in (two_valued_models, minimal_models, stable_models, supported_models, p_stable_models):
        with pytest.raises(CapExceededError):
            fn(big)
    small = NormalProgram(tuple(f"x{i}" for i in range(3)))
    with pytest.raises(CapExceededError):
        two_valued_models(small, cap=2)
    assert len(two_valued_models(small, cap=None)) == 8


def test_clause_dedup():
    p = NormalProgram(("a",), frozenset({Clause(0, 0, 0), Clause(0)}))
    assert len(p.clauses) == 1


def test_program_validates_signature():
    with pytest.raises(ValueError):
        NormalProgram(("a",), frozenset({Clause(1)}))
    with pytest.raises(ValueError):
        NormalProgram(("a",), frozenset({Clause(0, 0b10, 0)}))


def test_format_and_parse():
    p = prog(("def(a)", "def(b)", "c"), ("def(a)", ["c"], ["def(b)"]), ("c", "", ""))
    text = format_program(p)
    assert text == "% sig: def(a) def(b) c\ndef(a) :- c, not def(b).\nc.\n"
    assert parse_program(text) == p
    assert format_program(NormalProgram()) == "% sig:\n"


@given(programs())
def test_format_round_trip(p):
    assert parse_program(format_program(p)) == p


# -- cross-checks against the set-based definitions ----------------------------


def as_sets(p, models):
    return sorted(map(frozenset, names(p, models)), key=sorted)


def norm(ms):
    return sorted(ms, key=sorted)


@settings(max_examples=150, deadline=None)
@given(programs())
def test_enumerators_match_naive(p):
    rules = naive.rules_of(p)
    assert as_sets(p, two_valued_models(p)) == norm(naive.models(p.atoms, rules))
    assert as_sets(p, minimal_models(p)) == norm(naive.minimal(naive.models(p.atoms, rules)))
    assert as_sets(p, stable_models(p)) == norm(naive.stable(p.atoms, rules))
    assert as_sets(p, supported_models(p)) == norm(naive.supported(p.atoms, rules))
    assert as_sets(p, p_stable_models(p)) == norm(naive.p_stable(p.atoms, rules))


@settings(max_examples=150, deadline=None)
@given(programs())
def test_reduct_properties(p):
    for m in range(1 << p.n):
        gl, rd = gl_reduce(p, m), red_reduce(p, m)
        assert gl.is_definite
        assert facts(gl) == facts(rd)
        assert set(gl.names_of(facts(gl))) == naive.facts(naive.reduct(naive.rules_of(p), frozenset(p.names_of(m))))
    assert red_reduce(p, p.full) == p
    assert red_reduce(p, 0) == gl_reduce(p, 0)


@settings(max_examples=150, deadline=None)
@given(programs())
def test_semantic_inclusions(p):
    two = set(two_valued_models(p))
    minimal = set(minimal_models(p))
    stable = set(stable_models(p))
    assert stable <= minimal <= two
    assert stable <= set(supported_models(p))
    assert set(p_stable_models(p)) <= two
    assert list(two_valued_models(p)) == sorted(two)


@settings(max_examples=150, deadline=None)
@given(programs())
def test_definite_programs(p):
    d = p.with_clauses(Clause(c.head, c.pos) for c in p.clauses)
    lm = least_model(d)
    assert stable_models(d) == [lm]
    assert lm in minimal_models(d)


@given(programs(max_atoms=6))
def test_least_model_iterations_bounded(p):
    d = p.with_clauses(Clause(c.head, c.pos) for c in p.clauses)
    m, rounds = 0, 0
    while True:
        nxt = m
        for c in d.clauses:
            if c.pos & m == c.pos:
                nxt |= 1 << c.head
        if nxt == m:
            break
        m, rounds = nxt, rounds + 1
    assert rounds <= d.n
    assert m == least_model(d)
