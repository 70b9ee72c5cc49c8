import copy
from math import comb

import pytest

from suffixearley.earley import recognize_earley
from suffixearley.grammar import parse_grammar
from suffixearley.oracle import (OracleCapError, all_strings, check_prop_earley,
                                 check_prop_variant, count_acyclic_parses, count_trees, derives,
                                 enumerate_language, enumerate_trees, is_cycle_free,
                                 left_contexts, tree_yield)
from suffixearley.variant import recognize_variant


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def test_derives(anbn, example):
    assert derives(anbn, "S", "a a b b")
    assert not derives(anbn, "S", "a b b")
    assert derives(example, "A", "")
    assert derives(example, "A B", "a a a")
    assert not derives(parse_grammar("S -> S"), "S", "")


def test_derives_cap(anbn):
    with pytest.raises(OracleCapError):
        derives(anbn, "S", ["a"] * 13)


def test_enumerate_language(anbn, example):
    assert enumerate_language(anbn, 4) == {(), ("a", "b"), ("a", "a", "b", "b")}
    assert enumerate_language(parse_grammar("S -> S"), 5) == set()
    assert enumerate_language(example, 2) == {(), ("a",), ("a", "a")}
    with pytest.raises(OracleCapError):
        enumerate_language(anbn, 9)


@pytest.mark.parametrize("text", ["S -> a S b | ", "S -> A B\nA -> C\nB -> C\nC -> a C\nC ->",
                                  "S -> S S | a | ", "S -> a S | S b | "])
def test_derives_agrees_with_enumeration(text):
    g = parse_grammar(text)
    lang = enumerate_language(g, 5)
    for w in all_strings([t.name for t in g.terminals], 5):
        assert derives(g, "S", w) == (w in lang)


def test_count_acyclic_parses_examples():
    assert count_acyclic_parses(parse_grammar("S -> a"), "a") == 1
    assert count_acyclic_parses(parse_grammar("S -> S S | a"), "a a a") == 2
    assert count_acyclic_parses(parse_grammar("S -> S | a"), "a") == 1
    assert count_acyclic_parses(parse_grammar("S -> a"), "") == 0


@pytest.mark.parametrize("n", [1, 2, 5, 10, 40])
def test_catalan_counts(n):
    assert count_acyclic_parses(parse_grammar("S -> S S | a"), ["a"] * n) == catalan(n - 1)


def test_count_matches_unrestricted_count_without_cycles():
    g = parse_grammar("S -> S S | a | A\nA -> a b | a B\nB -> b")
    assert is_cycle_free(g)
    for w in all_strings(["a", "b"], 5):
        assert count_acyclic_parses(g, w) == count_trees(g, w)


def test_cycle_detection():
    assert not is_cycle_free(parse_grammar("S -> S | a"))
    assert not is_cycle_free(parse_grammar("S -> A B\nA -> S | a\nB -> "))
    assert is_cycle_free(parse_grammar("S -> a S b | "))


@pytest.mark.parametrize("text, w", [("S -> S S | S | a | ", "a a"),
                                     ("S -> A\nA -> S | a", "a"),
                                     ("S -> S S | a", "a a a a")])
def test_enumerated_trees_are_acyclic_and_counted(text, w):
    g = parse_grammar(text)
    trees = list(enumerate_trees(g, w, limit=1000))
    assert len(trees) == count_acyclic_parses(g, w)
    assert len(set(trees)) == len(trees)
    assert all(tree_yield(g, t) == g.coerce(w) for t in trees)


def test_left_contexts_simple():
    g = parse_grammar("S -> a A\nA -> b")
    ctx = left_contexts(g, "a b")
    assert (0, g.symbol("S").id) in ctx and (1, g.symbol("A").id) in ctx
    assert (0, g.symbol("A").id) not in ctx


def test_check_prop_earley_clean_and_corrupted(example):
    chart, _ = recognize_earley(example, "a")
    assert check_prop_earley(example, "a", chart) == []
    broken = copy.deepcopy(chart)
    victim = sorted(broken.entries[(0, 1)])[0]
    broken.entries[(0, 1)].discard(victim)
    problems = check_prop_earley(example, "a", broken)
    assert len(problems) == 1 and problems[0].startswith("missing 0 1 ")


def test_check_prop_earley_trivial():
    g = parse_grammar("S -> a")
    chart, _ = recognize_earley(g, "a")
    assert check_prop_earley(g, "a", chart) == []


def test_check_prop_variant(example):
    chart, _ = recognize_earley(example, "a a")
    u, t, _ = recognize_variant(example, "a a")
    assert check_prop_variant(example, "a a", chart, u, t) == []


def test_check_prop_variant_detects_added_item():
    g = parse_grammar("S -> a b")
    chart, _ = recognize_earley(g, "a b")
    u, t, _ = recognize_variant(g, "a b")
    u.entries[2].add(g.suffixes.ids[(g.symbol("b").id,)])
    assert check_prop_variant(g, "a b", chart, u, t) == ["U unexpected 2 [b]"]


def test_check_prop_variant_epsilon():
    g = parse_grammar("S ->")
    chart, _ = recognize_earley(g, "")
    u, t, _ = recognize_variant(g, "")
    assert check_prop_variant(g, "", chart, u, t) == []
