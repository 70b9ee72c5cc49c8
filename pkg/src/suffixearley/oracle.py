"""Brute-force ground truth for the recognizers.

Nothing here shares code with the chart engines.  Derivability is decided
bottom-up over spans (a CYK-style fixpoint that tolerates epsilon rules and
unit cycles), language enumeration is a length-bounded fixpoint over string
sets, and parse counting walks derivation trees directly.
"""

from __future__ import annotations

import sys
from functools import lru_cache
from itertools import product

from .grammar import DottedItem, Grammar

MAX_TARGET = 12
MAX_GRAMMAR_SIZE = 400
MAX_ENUM_LEN = 8
MAX_COUNT_LEN = 64


class OracleCapError(ValueError):
    """Input exceeds the configured brute-force caps."""


def _check_caps(g, length, cap):
    if length > cap:
        raise OracleCapError(f"input length {length} exceeds oracle cap {cap}")
    if g.size > MAX_GRAMMAR_SIZE:
        raise OracleCapError(f"grammar size {g.size} exceeds oracle cap {MAX_GRAMMAR_SIZE}")


class SpanTable:
    """``spans[(i, j)]``: nonterminals deriving ``target[i:j]``.

    Spans are filled shortest first; within one span the set is iterated to
    a fixpoint, which handles unit chains and nullable neighbours.
    """

    def __init__(self, g: Grammar, target):
        self.g = g
        self.target = tuple(target)
        self.spans: dict[tuple[int, int], frozenset] = {}
        n = len(self.target)
        for length in range(n + 1):
            for i in range(n - length + 1):
                self._fill(i, i + length)

    def _fill(self, i, j):
        found: set[int] = set()
        self.spans[(i, j)] = found
        changed = True
        while changed:
            changed = False
            for p in self.g.productions:
                if p.lhs not in found and self.seq(p.rhs, i, j):
                    found.add(p.lhs)
                    changed = True
        self.spans[(i, j)] = frozenset(found)

    def symbol(self, x, i, j):
        sym = self.g.symbols[x]
        if sym.terminal:
            return j == i + 1 and self.target[i] == x
        return x in self.spans.get((i, j), ())

    def seq(self, symbols, i, j):
        """Does the symbol sequence derive ``target[i:j]``?"""
        reach = {i}
        for x in symbols:
            reach = {k2 for k in reach for k2 in range(k, j + 1) if self.symbol(x, k, k2)}
            if not reach:
                return False
        return j in reach


def derives(g: Grammar, origin, target, cap: int = MAX_TARGET) -> bool:
    """True iff ``origin`` (a symbol sequence) derives the terminal string ``target``."""
    origin = _ids(g, origin)
    target = g.coerce(target)
    _check_caps(g, len(target), cap)
    return SpanTable(g, target).seq(origin, 0, len(target))


def _ids(g, seq):
    if isinstance(seq, str):
        seq = seq.split()
    out = []
    for x in seq:
        if isinstance(x, int):
            out.append(x)
        else:
            out.append(g.symbol(getattr(x, "name", x)).id)
    return tuple(out)


def enumerate_language(g: Grammar, max_len: int, cap: int = MAX_ENUM_LEN) -> set[tuple[str, ...]]:
    """All sentences of ``g`` of length at most ``max_len``, as name tuples."""
    _check_caps(g, max_len, cap)
    lang: dict[int, set[tuple]] = {s.id: set() for s in g.nonterminals}

    def strings(x):
        if g.symbols[x].terminal:
            return {(x,)}
        return lang[x]

    changed = True
    while changed:
        changed = False
        for p in g.productions:
            acc = {()}
            for x in p.rhs:
                acc = {a + b for a in acc for b in strings(x) if len(a) + len(b) <= max_len}
                if not acc:
                    break
            new = acc - lang[p.lhs]
            if new:
                lang[p.lhs] |= new
                changed = True
    return {tuple(g.names(s)) for s in lang[g.start.id]}


def count_acyclic_parses(g: Grammar, w, cap: int = MAX_COUNT_LEN) -> int:
    """Number of derivation trees of ``w`` with no subderivation ``A =>+ A``.

    Such a cycle is a node labelled A over span (i, j) with a proper
    descendant also labelled A over (i, j); every node between them spans
    (i, j) too, so a guard set carried along same-span chains suffices.
    """
    w = g.coerce(w)
    _check_caps(g, len(w), cap)
    n = len(w)
    spans = SpanTable(g, w)
    is_terminal = [s.terminal for s in g.symbols]

    @lru_cache(maxsize=None)
    def count_nt(a, i, j, guard):
        if a in guard or a not in spans.spans[(i, j)]:
            return 0
        inner = guard | {a}
        return sum(count_seq(p.rhs, 0, i, i, j, inner) for p in g.by_lhs[a])

    @lru_cache(maxsize=None)
    def count_seq(rhs, pos, k, i, j, inner):
        # ways rhs[pos:] derives w[k:j], as children of a node spanning (i, j)
        if pos == len(rhs):
            return 1 if k == j else 0
        x = rhs[pos]
        total = 0
        if is_terminal[x]:
            if k < j and w[k] == x:
                total = count_seq(rhs, pos + 1, k + 1, i, j, inner)
            return total
        for k2 in range(k, j + 1):
            rest = count_seq(rhs, pos + 1, k2, i, j, inner)
            if rest:
                child_guard = inner if (k, k2) == (i, j) else frozenset()
                total += rest * count_nt(x, k, k2, child_guard)
        return total

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000))
    try:
        return count_nt(g.start.id, 0, n, frozenset())
    finally:
        sys.setrecursionlimit(old)


def count_trees(g: Grammar, w, cap: int = MAX_TARGET) -> int:
    """Unrestricted tree count; only finite (and meaningful) on cycle-free grammars."""
    w = g.coerce(w)
    _check_caps(g, len(w), cap)
    is_terminal = [s.terminal for s in g.symbols]
    spans = SpanTable(g, w)

    @lru_cache(maxsize=None)
    def nt(a, i, j):
        return sum(seq(p.rhs, i, j) for p in g.by_lhs[a])

    @lru_cache(maxsize=None)
    def seq(rhs, i, j):
        if not rhs:
            return 1 if i == j else 0
        x, rest = rhs[0], rhs[1:]
        if is_terminal[x]:
            return seq(rest, i + 1, j) if i < j and w[i] == x else 0
        total = 0
        for k in range(i, j + 1):
            if spans.symbol(x, i, k):
                tail = seq(rest, k, j)
                if tail:
                    total += nt(x, i, k) * tail
        return total

    return nt(g.start.id, 0, len(w))


def is_cycle_free(g: Grammar) -> bool:
    """No nonterminal derives itself in one or more steps."""
    nullable = nullable_set(g)
    unit = {a.id: set() for a in g.nonterminals}
    for p in g.productions:
        for k, x in enumerate(p.rhs):
            if not g.symbols[x].terminal and all(
                    y in nullable for y in p.rhs[:k] + p.rhs[k + 1:]):
                unit[p.lhs].add(x)
    for a in unit:
        seen, stack = set(), list(unit[a])
        while stack:
            b = stack.pop()
            if b == a:
                return False
            if b not in seen:
                seen.add(b)
                stack.extend(unit[b])
    return True


def nullable_set(g: Grammar) -> set[int]:
    nullable: set[int] = set()
    changed = True
    while changed:
        changed = False
        for p in g.productions:
            if p.lhs not in nullable and all(x in nullable for x in p.rhs):
                nullable.add(p.lhs)
                changed = True
    return nullable


def enumerate_trees(g: Grammar, w, limit: int):
    """Yield acyclic derivation trees of ``w`` as nested tuples, stopping after ``limit + 1``.

    A tree is ``(production id, children)`` with terminal leaves as ints.
    Used to cross-check :func:`count_acyclic_parses` on small instances.
    """
    w = g.coerce(w)
    n = len(w)
    is_terminal = [s.terminal for s in g.symbols]
    spans = SpanTable(g, w)

    def trees_nt(a, i, j, guard):
        if a in guard or a not in spans.spans[(i, j)]:
            return
        inner = guard | {a}
        for p in g.by_lhs[a]:
            for kids in trees_seq(p.rhs, i, j, i, j, inner):
                yield (p.id, kids)

    def trees_seq(rhs, k, j, pi, pj, inner):
        if not rhs:
            if k == j:
                yield ()
            return
        x, rest = rhs[0], rhs[1:]
        if is_terminal[x]:
            if k < j and w[k] == x:
                for tail in trees_seq(rest, k + 1, j, pi, pj, inner):
                    yield (x,) + tail
            return
        for k2 in range(k, j + 1):
            if not spans.seq(rest, k2, j):
                continue
            guard = inner if (k, k2) == (pi, pj) else frozenset()
            for t in trees_nt(x, k, k2, guard):
                for tail in trees_seq(rest, k2, j, pi, pj, inner):
                    yield (t,) + tail

    count = 0
    for tree in trees_nt(g.start.id, 0, n, frozenset()):
        yield tree
        count += 1
        if count > limit:
            return


def tree_yield(g: Grammar, tree) -> tuple[int, ...]:
    if isinstance(tree, int):
        return (tree,)
    _, kids = tree
    return tuple(x for k in kids for x in tree_yield(g, k))


# -- characterization checkers--------------------------------------------------

def left_contexts(g: Grammar, w, spans: SpanTable | None = None) -> set[tuple[int, int]]:
    """Pairs ``(i, A)`` with ``S =>* w[:i] A gamma`` for some gamma.

    Least set containing ``(0, S)`` and closed under: if ``(h, B)`` holds,
    ``B -> alpha A beta`` is a rule and ``alpha =>* w[h:i]``, then ``(i, A)``
    holds.  Nodes left of A in such a sentential form are fully expanded,
    which is why alpha must derive a terminal string.
    """
    w = g.coerce(w)
    spans = spans or SpanTable(g, w)
    n = len(w)
    found = {(0, g.start.id)}
    stack = [(0, g.start.id)]
    while stack:
        h, b = stack.pop()
        for p in g.by_lhs[b]:
            for k, x in enumerate(p.rhs):
                if g.symbols[x].terminal:
                    continue
                for i in range(h, n + 1):
                    if (i, x) not in found and spans.seq(p.rhs[:k], h, i):
                        found.add((i, x))
                        stack.append((i, x))
    return found


def expected_earley_chart(g: Grammar, w) -> set[tuple[int, int, DottedItem]]:
    """Every ``(i, j, item)`` that the conditions A1 and A2 admit."""
    w = g.coerce(w)
    n = len(w)
    spans = SpanTable(g, w)
    ctx = left_contexts(g, w, spans)
    out = set()
    for p in g.productions:
        for i in range(n + 1):
            if (i, p.lhs) not in ctx:
                continue
            for d in range(len(p.rhs) + 1):
                for j in range(i, n + 1):
                    if spans.seq(p.rhs[:d], i, j):
                        out.add((i, j, DottedItem(p.id, d)))
    return out


def expected_variant_tables(g: Grammar, w):
    """U and T from the left-context/derivability conditions alone.

    Returns ``(u, t)`` as sets of ``(j, sid)`` and ``(j, k, sid)``.
    """
    w = g.coerce(w)
    n = len(w)
    sfx = g.suffixes
    spans = SpanTable(g, w)
    ctx = left_contexts(g, w, spans)
    u = set()
    for p in g.productions:
        for i in range(n + 1):
            if (i, p.lhs) not in ctx:
                continue
            for d in range(len(p.rhs) + 1):
                for j in range(i, n + 1):
                    if spans.seq(p.rhs[:d], i, j):
                        u.add((j, sfx.ids[p.rhs[d:]]))
    t = {(j, k, s) for j, s in u for k in range(j, n + 1)
         if spans.seq(sfx[s].symbols, j, k)}
    return u, t


def check_prop_earley(g: Grammar, w, chart) -> list[str]:
    """Differences between ``chart`` and the item characterization, one message each."""
    w = g.coerce(w)
    expected = expected_earley_chart(g, w)
    actual = set(chart.triples())
    out = []
    for i, j, it in sorted(expected - actual):
        out.append(f"missing {i} {j} {g.format_production(g.productions[it.production], it.dot)}")
    for i, j, it in sorted(actual - expected):
        out.append(f"unexpected {i} {j} {g.format_production(g.productions[it.production], it.dot)}")
    return out


def check_prop_variant(g: Grammar, w, chart, u, t) -> list[str]:
    """Compare U and T against their characterization in terms of ``chart``.

    ``[beta]`` belongs in U_j iff some ``[A -> alpha . beta]`` is in E_{i,j};
    it belongs in T_{j,k} iff additionally ``beta =>* w[j:k]``.
    """
    w = g.coerce(w)
    n = len(w)
    sfx = g.suffixes
    spans = SpanTable(g, w)
    want_u = {(j, sfx.ids[g.productions[it.production].rhs[it.dot:]])
              for _, j, it in chart.triples()}
    want_t = {(j, k, s) for j, s in want_u for k in range(j, n + 1)
              if spans.seq(sfx[s].symbols, j, k)}
    have_u = set(u.pairs())
    have_t = set(t.triples())

    def show(s):
        return " ".join(g.names(sfx[s].symbols)) or "<eps>"

    out = []
    out += [f"U missing {j} [{show(s)}]" for j, s in sorted(want_u - have_u)]
    out += [f"U unexpected {j} [{show(s)}]" for j, s in sorted(have_u - want_u)]
    out += [f"T missing {i} {j} [{show(s)}]" for i, j, s in sorted(want_t - have_t)]
    out += [f"T unexpected {i} {j} [{show(s)}]" for i, j, s in sorted(have_t - want_t)]
    return out


def all_strings(alphabet, max_len):
    for length in range(max_len + 1):
        yield from product(alphabet, repeat=length)
