"""Earley variant over suffix items: a forward array U and a backward table T.

Forward steps record only which rhs suffixes remain to be recognized at a
position (no left position).  Once a suffix is recognized in full, backward
steps recover the left positions in T, right to left.  The six rules run in a
single semi-naive agenda because forward completion consumes T entries.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .grammar import Grammar


@dataclass
class VariantStats:
    steps1: int = 0
    steps2: int = 0
    steps3: int = 0
    steps4: int = 0
    steps5: int = 0
    steps6: int = 0
    seed: int = 0
    u_items: int = 0
    t_items: int = 0
    accepted: bool = False

    @property
    def steps(self) -> tuple[int, ...]:
        return (self.steps1, self.steps2, self.steps3, self.steps4, self.steps5, self.steps6)

    @property
    def total(self) -> int:
        return sum(self.steps) + self.seed

    def as_dict(self) -> dict:
        d = {f"steps{k}": v for k, v in enumerate(self.steps, 1)}
        d.update(seed=self.seed, total=self.total, uItems=self.u_items,
                 tItems=self.t_items, accepted=self.accepted)
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def _fmt_suffix(g, item):
    return " ".join([".", *g.names(item.symbols)])


@dataclass
class ForwardArray:
    grammar: Grammar
    sentence: tuple
    entries: dict = field(default_factory=dict)  # j -> set of suffix ids

    @property
    def n(self):
        return len(self.sentence)

    def __len__(self):
        return sum(len(s) for s in self.entries.values())

    def query(self, j: int) -> set:
        if not 0 <= j <= self.n:
            raise IndexError(f"position {j} outside 0..{self.n}")
        table = self.grammar.suffixes
        return {table[s] for s in self.entries.get(j, ())}

    def pairs(self):
        for j, sids in self.entries.items():
            for s in sids:
                yield j, s

    def dump(self) -> str:
        g = self.grammar
        lines = sorted(f"{j} {_fmt_suffix(g, g.suffixes[s])}" for j, s in self.pairs())
        return "".join(line + "\n" for line in lines)


@dataclass
class BackwardTable:
    grammar: Grammar
    sentence: tuple
    entries: dict = field(default_factory=dict)  # (i, j) -> set of suffix ids

    @property
    def n(self):
        return len(self.sentence)

    def __len__(self):
        return sum(len(s) for s in self.entries.values())

    def query(self, i: int, j: int) -> set:
        if not 0 <= i <= j <= self.n:
            raise IndexError(f"table position ({i}, {j}) outside 0 <= i <= j <= {self.n}")
        table = self.grammar.suffixes
        return {table[s] for s in self.entries.get((i, j), ())}

    def triples(self):
        for (i, j), sids in self.entries.items():
            for s in sids:
                yield i, j, s

    def dump(self) -> str:
        g = self.grammar
        lines = sorted(f"{i} {j} {_fmt_suffix(g, g.suffixes[s])}" for i, j, s in self.triples())
        return "".join(line + "\n" for line in lines)


def forward_query(u: ForwardArray, j: int) -> set:
    return u.query(j)


def backward_query(t: BackwardTable, i: int, j: int) -> set:
    return t.query(i, j)


def recognize_variant(g: Grammar, w, order: str = "fifo", trace=None):
    """Run the suffix-item recognizer on ``w``.

    Returns ``(U, T, stats)``.  ``trace(step, kind, position, sid)`` is
    called once per rule application, ``kind`` being ``"U"`` (position is
    ``j``) or ``"T"`` (position is ``(i, j)``).
    """
    if order not in ("fifo", "lifo"):
        raise ValueError(f"unknown agenda order {order!r}")
    w = g.coerce(w)
    n = len(w)
    sfx = g.suffixes
    head, tail, extend, lhs_of_full = sfx.head, sfx.tail, sfx.extend, sfx.lhs_of_full
    full = sfx.full
    is_terminal = [s.terminal for s in g.symbols]
    by_lhs = g.by_lhs

    U = ForwardArray(g, w)
    T = BackwardTable(g, w)
    stats = VariantStats()
    agenda = deque()
    pop = agenda.popleft if order == "fifo" else agenda.pop

    # processed facts, indexed for joins
    u_done = set()      # (j, s)
    u_by_head = {}      # (j, X) -> [s] with head X
    t_from = {}         # (i, s) -> [j] with s in T[i][j]
    t_to = {}           # j -> [(i, s)] with s in T[i][j]

    def add_u(step, j, s):
        if step:
            setattr(stats, f"steps{step}", getattr(stats, f"steps{step}") + 1)
            if trace:
                trace(step, "U", j, s)
        cell = U.entries.setdefault(j, set())
        if s not in cell:
            cell.add(s)
            agenda.append(("U", j, s))

    def add_t(step, i, j, s):
        setattr(stats, f"steps{step}", getattr(stats, f"steps{step}") + 1)
        if trace:
            trace(step, "T", (i, j), s)
        cell = T.entries.setdefault((i, j), set())
        if s not in cell:
            cell.add(s)
            agenda.append(("T", i, j, s))

    for p in g.start_productions:
        stats.seed += 1
        add_u(0, 0, full[p.id])

    while agenda:
        fact = pop()
        if fact[0] == "U":
            _, k, s = fact
            u_done.add((k, s))
            x = head[s]
            if x < 0:
                add_t(4, k, k, s)
                continue
            u_by_head.setdefault((k, x), []).append(s)
            beta = tail[s]
            if is_terminal[x]:
                if k < n and w[k] == x:
                    add_u(2, k + 1, beta)
                    for m in t_from.get((k + 1, beta), ()):
                        add_t(5, k, m, s)
                continue
            for q in by_lhs[x]:
                add_u(1, k, full[q.id])
            for q in by_lhs[x]:
                for j in t_from.get((k, full[q.id]), ()):
                    add_u(3, j, beta)
                    for m in t_from.get((j, beta), ()):
                        add_t(6, k, m, s)
            continue

        _, i, j, s = fact
        # Step 6 tuples (U[k][B beta], B -> gamma, T[k][j'][gamma], T[j'][m][beta]).
        # This fact may fill the gamma slot, the beta slot, or both; collect
        # the tuples in a set so each is counted once.
        step6 = set()
        t_from.setdefault((i, s), []).append(j)
        t_to.setdefault(j, []).append((i, s))

        # as [gamma] in T[i][j]: a completed rhs of some B predicted at i
        for b in lhs_of_full.get(s, ()):
            for u in u_by_head.get((i, b), ()):
                add_u(3, j, tail[u])
                for m in t_from.get((j, tail[u]), ()):
                    step6.add((i, u, j, s, m))

        # as [beta] in T[i][j]
        if i > 0:
            u = extend.get((w[i - 1], s))
            if u is not None and (i - 1, u) in u_done:
                add_t(5, i - 1, j, u)

        for k, gamma in t_to.get(i, ()):
            for b in lhs_of_full.get(gamma, ()):
                u = extend.get((b, s))
                if u is not None and (k, u) in u_done:
                    step6.add((k, u, i, gamma, j))

        for k, u, _, _, m in sorted(step6):
            add_t(6, k, m, u)

    stats.u_items = len(U)
    stats.t_items = len(T)
    top = T.entries.get((0, n), ())
    stats.accepted = any(full[p.id] in top for p in g.start_productions)
    return U, T, stats
