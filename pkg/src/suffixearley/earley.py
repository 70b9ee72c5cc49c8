"""Classic Earley recognition over a triangular table of dotted-item sets.

The table is computed as a least fixpoint with a semi-naive agenda: every
item is processed exactly once, and an inference fires when the last of its
antecedents is processed.  This makes the rule counters count each distinct
antecedent combination exactly once, whatever the agenda order.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import asdict, dataclass, field

from .grammar import DottedItem, Grammar


@dataclass
class EarleyStats:
    steps1: int = 0
    steps2: int = 0
    steps3: int = 0
    seed: int = 0
    items: int = 0
    accepted: bool = False

    @property
    def total(self) -> int:
        return self.steps1 + self.steps2 + self.steps3 + self.seed

    def as_dict(self) -> dict:
        d = asdict(self)
        return {"steps1": d["steps1"], "steps2": d["steps2"], "steps3": d["steps3"],
                "seed": d["seed"], "total": self.total, "items": d["items"],
                "accepted": d["accepted"]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


@dataclass
class EarleyChart:
    grammar: Grammar
    sentence: tuple
    entries: dict = field(default_factory=dict)  # (i, j) -> set of DottedItem

    @property
    def n(self) -> int:
        return len(self.sentence)

    def __len__(self):
        return sum(len(s) for s in self.entries.values())

    def __contains__(self, key):
        i, j, item = key
        return item in self.entries.get((i, j), ())

    def query(self, i: int, j: int) -> set:
        if not 0 <= i <= j <= self.n:
            raise IndexError(f"chart position ({i}, {j}) outside 0 <= i <= j <= {self.n}")
        return set(self.entries.get((i, j), ()))

    def triples(self):
        for (i, j), items in self.entries.items():
            for item in items:
                yield i, j, item

    def dump(self) -> str:
        g = self.grammar
        lines = sorted(f"{i} {j} {g.format_production(g.productions[it.production], it.dot)}"
                       for i, j, it in self.triples())
        return "".join(line + "\n" for line in lines)


def chart_query(chart: EarleyChart, i: int, j: int) -> set:
    return chart.query(i, j)


def _pop(agenda, order):
    return agenda.popleft() if order == "fifo" else agenda.pop()


def recognize_earley(g: Grammar, w, order: str = "fifo", trace=None):
    """Run Earley's recognizer on ``w`` (terminal names or ids).

    Returns ``(chart, stats)``.  ``order`` picks the agenda discipline,
    ``"fifo"`` or ``"lifo"``; results do not depend on it.  ``trace``, if
    given, is called as ``trace(step, i, j, item)`` once per rule
    application with the consequent item.
    """
    if order not in ("fifo", "lifo"):
        raise ValueError(f"unknown agenda order {order!r}")
    w = g.coerce(w)
    n = len(w)
    prods = g.productions
    is_terminal = [s.terminal for s in g.symbols]
    by_lhs = g.by_lhs
    chart = EarleyChart(g, w)
    entries = chart.entries
    stats = EarleyStats()
    agenda = deque()

    # processed items waiting as Step 3 antecedents
    active = {}    # (k, B) -> list of (i, prod, dot) with B after the dot at E[i][k]
    complete = {}  # (k, B) -> list of j with some B -> gamma . in E[k][j]

    def add(i, j, p, d):
        cell = entries.setdefault((i, j), set())
        item = DottedItem(p, d)
        if item not in cell:
            cell.add(item)
            agenda.append((i, j, p, d))

    for p in g.start_productions:
        stats.seed += 1
        add(0, 0, p.id, 0)

    while agenda:
        i, j, p, d = _pop(agenda, order)
        rhs = prods[p].rhs
        if d < len(rhs):
            x = rhs[d]
            if is_terminal[x]:
                if j < n and w[j] == x:
                    stats.steps2 += 1
                    if trace:
                        trace(2, i, j + 1, DottedItem(p, d + 1))
                    add(i, j + 1, p, d + 1)
            else:
                for q in by_lhs[x]:
                    stats.steps1 += 1
                    if trace:
                        trace(1, j, j, DottedItem(q.id, 0))
                    add(j, j, q.id, 0)
                active.setdefault((j, x), []).append((i, p, d))
                for m in complete.get((j, x), ()):
                    stats.steps3 += 1
                    if trace:
                        trace(3, i, m, DottedItem(p, d + 1))
                    add(i, m, p, d + 1)
        else:
            b = prods[p].lhs
            # one application per (active item, complete item) pair; distinct
            # complete items of B over the same span are distinct antecedents
            complete.setdefault((i, b), []).append(j)
            for h, q, e in active.get((i, b), ()):
                stats.steps3 += 1
                if trace:
                    trace(3, h, j, DottedItem(q, e + 1))
                add(h, j, q, e + 1)

    stats.items = len(chart)
    stats.accepted = any(DottedItem(p.id, len(p.rhs)) in entries.get((0, n), ())
                         for p in g.start_productions)
    return chart, stats
