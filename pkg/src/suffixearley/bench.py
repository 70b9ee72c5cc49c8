"""Side-by-side runs of the three recognizers and the comparison report."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .earley import recognize_earley
from .grammar import Grammar, tau2_transform
from .variant import recognize_variant

COLUMNS = ("grammar", "sentences", "mean_len", "earley_steps", "earley_items",
           "variant_steps", "u_items", "t_items", "ut_items", "tau2_steps", "tau2_items")


class EngineDisagreement(AssertionError):
    def __init__(self, sentence, verdicts):
        self.sentence = sentence
        self.verdicts = verdicts
        super().__init__(f"engines disagree on {' '.join(sentence)!r}: {verdicts}")


class InvariantViolation(AssertionError):
    pass


@dataclass
class RunRecord:
    sentence: tuple
    per_engine: dict = field(default_factory=dict)  # engine -> (accepted, stats)


@dataclass
class ComparisonRow:
    grammar_name: str
    sentence_count: int
    mean_len: Fraction
    earley_steps: Fraction
    earley_items: Fraction
    variant_steps: Fraction
    u_items: Fraction
    t_items: Fraction
    tau2_steps: Fraction
    tau2_items: Fraction

    @property
    def ut_items(self) -> Fraction:
        return self.u_items + self.t_items

    def values(self) -> tuple:
        return (self.grammar_name, self.sentence_count, self.mean_len, self.earley_steps,
                self.earley_items, self.variant_steps, self.u_items, self.t_items,
                self.ut_items, self.tau2_steps, self.tau2_items)


def check_invariants(n, e, v):
    """Size and step bounds relating one Earley run to one variant run."""
    problems = []
    if v.u_items > e.items:
        problems.append(f"|U|={v.u_items} > |E|={e.items}")
    if n >= 1 and v.t_items > n * e.items:
        problems.append(f"|T|={v.t_items} > n*|E|={n * e.items}")
    for k in (1, 2, 3):
        if getattr(v, f"steps{k}") > getattr(e, f"steps{k}"):
            problems.append(f"V{k}={getattr(v, f'steps{k}')} > E{k}={getattr(e, f'steps{k}')}")
    if v.total > (n + 2) * e.total:
        problems.append(f"V={v.total} > (n+2)E={(n + 2) * e.total}")
    return problems


def run_sentence(g: Grammar, g2: Grammar, sentence) -> RunRecord:
    _, e = recognize_earley(g, sentence)
    _, _, v = recognize_variant(g, sentence)
    _, t = recognize_earley(g2, sentence)
    record = RunRecord(tuple(sentence), {"earley": (e.accepted, e), "variant": (v.accepted, v),
                                         "tau2": (t.accepted, t)})
    verdicts = {k: acc for k, (acc, _) in record.per_engine.items()}
    if len(set(verdicts.values())) != 1:
        raise EngineDisagreement(record.sentence, verdicts)
    problems = check_invariants(len(sentence), e, v)
    if problems:
        raise InvariantViolation(f"{' '.join(sentence)!r}: " + "; ".join(problems))
    return record


def compare(g: Grammar, sentences, name: str = "grammar"):
    """Run Earley, the variant and Earley on tau2(g) over every sentence.

    Returns the aggregate :class:`ComparisonRow` and the per-sentence records.
    Raises :class:`EngineDisagreement` or :class:`InvariantViolation` on a
    correctness bug.
    """
    sentences = [tuple(g.names(g.coerce(s))) for s in sentences]
    if not sentences:
        raise ValueError("no sentences to compare")
    g2 = tau2_transform(g)
    records = [run_sentence(g, g2, s) for s in sentences]
    k = len(records)

    def mean(f):
        return Fraction(sum(f(r) for r in records), k)

    row = ComparisonRow(
        grammar_name=name,
        sentence_count=k,
        mean_len=mean(lambda r: len(r.sentence)),
        earley_steps=mean(lambda r: r.per_engine["earley"][1].total),
        earley_items=mean(lambda r: r.per_engine["earley"][1].items),
        variant_steps=mean(lambda r: r.per_engine["variant"][1].total),
        u_items=mean(lambda r: r.per_engine["variant"][1].u_items),
        t_items=mean(lambda r: r.per_engine["variant"][1].t_items),
        tau2_steps=mean(lambda r: r.per_engine["tau2"][1].total),
        tau2_items=mean(lambda r: r.per_engine["tau2"][1].items),
    )
    return row, records


def fmt_mean(x) -> str:
    """Exact rational to one decimal place, ties to even."""
    if isinstance(x, Fraction):
        tenths = round(x * 10)  # exact; Fraction rounds half to even
        return f"{tenths // 10}.{tenths % 10}"
    return str(x)


def _cells(row):
    return [fmt_mean(v) for v in row.values()]


def render_report(rows, fmt: str = "csv") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow(_cells(row))
        return buf.getvalue()
    if fmt == "json":
        out = []
        for row in rows:
            cells = _cells(row)
            obj = {"grammar": cells[0], "sentences": row.sentence_count}
            obj.update({c: float(v) for c, v in zip(COLUMNS[2:], cells[2:])})
            out.append(obj)
        return json.dumps(out, indent=2) + "\n"
    if fmt in ("md", "markdown"):
        header = ["G", "sentences", r"\|w\|", "Earley steps", r"Earley \|E\|",
                  "Variant steps", r"\|U\|", r"\|T\|", r"\|U\|+\|T\|", "tau2 steps",
                  r"tau2 \|E\|"]
        lines = ["| " + " | ".join(header) + " |",
                 "|" + "|".join(["---"] + ["---:"] * 10) + "|"]
        for row in rows:
            lines.append("| " + " | ".join(_cells(row)) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
