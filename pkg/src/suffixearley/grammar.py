"""Grammar model, the text format, item-set enumeration and the tau2 cover.

A grammar file holds one rule per line::

    %start S        # optional, defaults to the LHS of the first rule
    S -> A B
    C -> a C |

``|`` separates alternatives, an empty alternative is an epsilon rule and
``#`` starts a comment.  Nonterminals are exactly the names that occur on a
left-hand side; every other name is a terminal.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class GrammarError(ValueError):
    """Malformed grammar text or an inconsistent grammar."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownTerminalError(ValueError):
    """An input token that is not a terminal of the grammar."""

    def __init__(self, token):
        self.token = token
        super().__init__(f"unknown terminal {token!r}")


class Symbol(NamedTuple):
    id: int
    name: str
    terminal: bool

    def __str__(self):
        return self.name


class Production(NamedTuple):
    id: int
    lhs: int
    rhs: tuple


class DottedItem(NamedTuple):
    production: int
    dot: int


class SuffixItem(NamedTuple):
    id: int
    symbols: tuple


class SuffixTable:
    """Interned suffix items of a grammar plus the links the variant needs.

    Items are interned by content, so a suffix shared by several right-hand
    sides exists once.  ``tail[s]`` is the item with the first symbol removed,
    ``head[s]`` that first symbol (``-1`` for the empty suffix).
    """

    def __init__(self, grammar: Grammar):
        self.items: list[SuffixItem] = []
        self.ids: dict[tuple, int] = {}
        self.full: list[int] = []
        for p in grammar.productions:
            self.full.append(self._intern(p.rhs))
        self.empty = self.ids[()] if grammar.productions else None

        self.head = [s.symbols[0] if s.symbols else -1 for s in self.items]
        self.tail = [self.ids[s.symbols[1:]] if s.symbols else -1 for s in self.items]
        # full-rhs item id -> nonterminals having that rhs
        self.lhs_of_full: dict[int, list[int]] = {}
        for p in grammar.productions:
            self.lhs_of_full.setdefault(self.full[p.id], []).append(p.lhs)
        # (X, id of [beta]) -> id of [X beta]
        self.extend = {(s.symbols[0], self.tail[s.id]): s.id
                       for s in self.items if s.symbols}

    def _intern(self, rhs):
        # longest first, so ids follow first appearance
        for k in range(len(rhs) + 1):
            suffix = tuple(rhs[k:])
            if suffix not in self.ids:
                self.ids[suffix] = len(self.items)
                self.items.append(SuffixItem(len(self.items), suffix))
        return self.ids[tuple(rhs)]

    def __len__(self):
        return len(self.items)

    def __getitem__(self, sid):
        return self.items[sid]


class Grammar:
    """A context-free grammar with interned symbols.

    Build one with :meth:`from_rules` or :func:`parse_grammar`.  Instances are
    treated as immutable.
    """

    def __init__(self, symbols, productions, start):
        self.symbols: tuple[Symbol, ...] = tuple(symbols)
        self.productions: tuple[Production, ...] = tuple(productions)
        self.start: Symbol = start
        self._by_name = {s.name: s for s in self.symbols}
        if start.terminal:
            raise GrammarError(f"start symbol {start.name!r} has no productions")

    @classmethod
    def from_rules(cls, rules: Iterable[tuple[str, Sequence[str]]], start: str | None = None):
        """Build a grammar from ``(lhs, rhs-names)`` pairs.

        Duplicate rules collapse.  Symbol ids are assigned in order of first
        appearance.
        """
        rules = [(lhs, tuple(rhs)) for lhs, rhs in rules]
        if not rules:
            raise GrammarError("grammar has no productions")
        lhs_names = {lhs for lhs, _ in rules}
        ids: dict[str, int] = {}
        symbols = []

        def intern(name):
            if name not in ids:
                ids[name] = len(symbols)
                symbols.append(Symbol(len(symbols), name, name not in lhs_names))
            return ids[name]

        if start is not None:
            if start not in lhs_names:
                raise GrammarError(f"start symbol {start!r} never appears on a left-hand side")
            intern(start)
        seen = set()
        productions = []
        for lhs, rhs in rules:
            key = (intern(lhs), tuple(intern(x) for x in rhs))
            if key in seen:
                continue
            seen.add(key)
            productions.append(Production(len(productions), *key))
        start_sym = symbols[ids[start if start is not None else rules[0][0]]]
        return cls(symbols, productions, start_sym)

    def symbol(self, name: str) -> Symbol:
        return self._by_name[name]

    def __contains__(self, name):
        return name in self._by_name

    @cached_property
    def terminals(self) -> tuple[Symbol, ...]:
        return tuple(s for s in self.symbols if s.terminal)

    @cached_property
    def nonterminals(self) -> tuple[Symbol, ...]:
        return tuple(s for s in self.symbols if not s.terminal)

    @cached_property
    def by_lhs(self) -> dict[int, tuple[Production, ...]]:
        table: dict[int, list] = {s.id: [] for s in self.nonterminals}
        for p in self.productions:
            table[p.lhs].append(p)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def start_productions(self) -> tuple[Production, ...]:
        return self.by_lhs[self.start.id]

    @property
    def size(self) -> int:
        return sum(1 + len(p.rhs) for p in self.productions)

    @cached_property
    def suffixes(self) -> SuffixTable:
        return SuffixTable(self)

    def encode(self, sentence: Iterable) -> tuple[int, ...]:
        """Map terminal names (or Symbols) to symbol ids."""
        out = []
        for tok in sentence:
            name = tok.name if isinstance(tok, Symbol) else tok
            sym = self._by_name.get(name)
            if sym is None or not sym.terminal:
                raise UnknownTerminalError(name)
            out.append(sym.id)
        return tuple(out)

    def coerce(self, sentence) -> tuple[int, ...]:
        """Accept a whitespace-separated string, names, Symbols or ids."""
        if isinstance(sentence, str):
            sentence = sentence.split()
        sentence = tuple(sentence)
        if all(isinstance(x, int) for x in sentence):
            for x in sentence:
                if not (0 <= x < len(self.symbols) and self.symbols[x].terminal):
                    raise UnknownTerminalError(x)
            return sentence
        return self.encode(sentence)

    def names(self, ids: Iterable[int]) -> list[str]:
        return [self.symbols[i].name for i in ids]

    def format_production(self, p: Production, dot: int | None = None) -> str:
        rhs = self.names(p.rhs)
        if dot is not None:
            rhs.insert(dot, ".")
        return " ".join([self.symbols[p.lhs].name, "->", *rhs])

    def rules(self) -> list[tuple[str, tuple[str, ...]]]:
        return [(self.symbols[p.lhs].name, tuple(self.names(p.rhs))) for p in self.productions]

    def __repr__(self):
        return (f"<Grammar start={self.start.name} productions={len(self.productions)} "
                f"size={self.size}>")


def parse_grammar(text: str) -> Grammar:
    rules = []
    start = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("%"):
            parts = line.split()
            if parts[0] != "%start" or len(parts) != 2:
                raise GrammarError(f"bad directive {line!r}", lineno)
            start = parts[1]
            continue
        lhs, arrow, rest = line.partition("->")
        lhs = lhs.strip()
        if not arrow or not lhs or len(lhs.split()) != 1:
            raise GrammarError(f"expected 'LHS -> symbols', got {line!r}", lineno)
        for alt in rest.split("|"):
            rhs = alt.split()
            if "->" in rhs:
                raise GrammarError("more than one '->' on a line", lineno)
            rules.append((lhs, rhs))
    if not rules:
        raise GrammarError("grammar has no productions")
    if start is not None and start not in {lhs for lhs, _ in rules}:
        raise GrammarError(f"%start names {start!r}, which never appears on a left-hand side")
    return Grammar.from_rules(rules, start)


def serialize_grammar(g: Grammar) -> str:
    lines = [f"%start {g.start.name}"]
    for lhs, rhs in g.rules():
        lines.append(" ".join([lhs, "->", *rhs]))
    return "\n".join(lines) + "\n"


def read_grammar(path) -> Grammar:
    with open(path, encoding="utf-8", newline=None) as fh:
        return parse_grammar(fh.read())


def parse_sentences(text: str) -> list[tuple[str, ...]]:
    """One sentence per line; a blank line is the empty sentence."""
    lines = text.splitlines()
    return [tuple(line.split()) for line in lines]


def format_sentences(sentences: Iterable[Sequence[str]]) -> str:
    return "".join(" ".join(s) + "\n" for s in sentences)


def dotted_items(g: Grammar) -> set[DottedItem]:
    return {DottedItem(p.id, d) for p in g.productions for d in range(len(p.rhs) + 1)}


def suffix_items(g: Grammar) -> set[SuffixItem]:
    return set(g.suffixes.items)


def _fresh_name(symbols: tuple[str, ...], taken: set[str]) -> str:
    name = "[" + ".".join(symbols) + "]"
    while name in taken:
        name += "'"
    return name


def tau2_transform(g: Grammar) -> Grammar:
    """Rewrite ``g`` into two normal form, adding one nonterminal per suffix of length >= 2.

    ``A -> X alpha`` with ``|alpha| > 1`` becomes ``A -> X [alpha]``, and each
    such suffix gets ``[X alpha] -> X [alpha]`` or ``[X Y] -> X Y``.
    """
    taken = {s.name for s in g.symbols}
    names: dict[tuple[str, ...], str] = {}

    def suffix_nt(symbols):
        if symbols not in names:
            names[symbols] = _fresh_name(symbols, taken)
            taken.add(names[symbols])
        return names[symbols]

    rules = []
    for lhs, rhs in g.rules():
        if len(rhs) <= 2:
            rules.append((lhs, rhs))
        else:
            rules.append((lhs, (rhs[0], suffix_nt(rhs[1:]))))
    # suffix nonterminals are created lazily so only reachable ones exist;
    # every suffix of length >= 2 of a long rhs is reachable this way
    pending = list(names)
    done = set()
    while pending:
        symbols = pending.pop(0)
        if symbols in done:
            continue
        done.add(symbols)
        if len(symbols) == 2:
            rules.append((names[symbols], symbols))
        else:
            tail = symbols[1:]
            known = tail in names
            rules.append((names[symbols], (symbols[0], suffix_nt(tail))))
            if not known:
                pending.append(tail)
    return Grammar.from_rules(rules, g.start.name)
