import json

import pytest

from suffixearley.earley import recognize_earley
from suffixearley.grammar import parse_grammar
from suffixearley.oracle import check_prop_variant, expected_variant_tables
from suffixearley.variant import backward_query, forward_query, recognize_variant


def names(g, items):
    return {tuple(g.names(s.symbols)) for s in items}


def test_epsilon_path():
    g = parse_grammar("S ->")
    u, t, stats = recognize_variant(g, [])
    assert names(g, forward_query(u, 0)) == {()}
    assert names(g, backward_query(t, 0, 0)) == {()}
    assert stats.steps == (0, 0, 0, 1, 0, 0)
    assert stats.seed == 1 and stats.total == 2 and stats.accepted


def test_forward_query(example):
    u, _, _ = recognize_variant(example, "a")
    assert names(example, forward_query(u, 0)) >= {("A", "B")}
    assert names(example, forward_query(u, 1)) >= {("B",), ()}
    with pytest.raises(IndexError):
        forward_query(u, 2)


def test_backward_query_step4_and_acceptance(anbn):
    w = "a a b b"
    u, t, stats = recognize_variant(anbn, w)
    eps = anbn.suffixes.empty
    for m in range(5):
        assert (eps in t.entries.get((m, m), ())) == (eps in u.entries.get(m, ()))
    full = {anbn.suffixes.full[p.id] for p in anbn.start_productions}
    assert bool(full & {s.id for s in backward_query(t, 0, 4)}) is stats.accepted is True
    with pytest.raises(IndexError):
        backward_query(t, 3, 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_worked_example_T_count_is_triangular(example, n):
    # the left-context conditions admit [B] in T[i][j] for every 0 <= i <= j <= n
    b = example.suffixes.ids[(example.symbol("B").id,)]
    _, want_t = expected_variant_tables(example, ["a"] * n)
    _, t, _ = recognize_variant(example, ["a"] * n)
    got = sorted((i, j) for i, j, s in t.triples() if s == b)
    assert got == sorted((i, j) for i, j, s in want_t if s == b)
    assert len(got) == (n + 1) * (n + 2) // 2


@pytest.mark.parametrize("w", ["", "a b", "a a b b", "a b b", "b"])
def test_matches_earley_and_characterization(anbn, w):
    chart, e = recognize_earley(anbn, w)
    u, t, v = recognize_variant(anbn, w)
    assert v.accepted == e.accepted
    assert check_prop_variant(anbn, w, chart, u, t) == []


def test_stats_json(anbn):
    _, _, stats = recognize_variant(anbn, "a b")
    d = json.loads(stats.to_json())
    assert list(d) == ["steps1", "steps2", "steps3", "steps4", "steps5", "steps6", "seed",
                       "total", "uItems", "tItems", "accepted"]
    assert d["total"] == sum(d[f"steps{k}"] for k in range(1, 7)) + d["seed"]


def test_dumps_are_sorted(anbn):
    u, t, _ = recognize_variant(anbn, "a b")
    for text in (u.dump(), t.dump()):
        lines = text.splitlines()
        assert lines == sorted(lines) and lines
    assert "0 2 . a S b" in t.dump().splitlines()


def test_step6_self_join_counted_once():
    # [eps] in T[0][0] fills both T slots of Step 6 for [B] in U_0 with B -> eps
    g = parse_grammar("S -> B\nB -> ")
    _, _, stats = recognize_variant(g, [])
    assert stats.steps6 == 1 and stats.accepted


def test_order_independence(example):
    r1 = recognize_variant(example, "a a a", order="fifo")
    r2 = recognize_variant(example, "a a a", order="lifo")
    assert r1[0].entries == r2[0].entries and r1[1].entries == r2[1].entries
    assert r1[2] == r2[2]


def test_converge_shared_segment(capsys):
    from suffixearley.families import CONVERGE_INPUT, converge
    g = converge()
    a = next(p for p in g.productions if g.symbols[p.lhs].name == "A")
    earley_steps = []
    recognize_earley(g, CONVERGE_INPUT,
                     trace=lambda k, i, j, it: earley_steps.append((k, it)))
    segment = {g.suffixes.ids[a.rhs[t:]] for t in (2, 3)}
    variant_steps = []
    recognize_variant(g, CONVERGE_INPUT, trace=lambda k, kind, pos, s: variant_steps.append((k, s)))
    assert sum(1 for k, it in earley_steps
               if k == 3 and it.production == a.id and it.dot in (2, 3)) == 6
    assert sum(1 for k, s in variant_steps if k == 3 and s in segment) == 2
