"""Seeded random sentence generation.

The random stream is SplitMix64 (Steele, Lea and Flood): the state advances
by ``0x9E3779B97F4A7C15`` and each output is the state passed through the
finalizer ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
z *= 0x94D049BB133111EB; z ^= z >> 31`` (all arithmetic mod 2**64).  The
generator is seeded with the 64-bit seed as its initial state, so streams are
identical on every platform and easy to reproduce in other languages.

Choices among ``k`` alternatives use rejection sampling on the 64-bit output
(``x % k`` after discarding draws at or above the largest multiple of ``k``),
so every alternative is exactly equally likely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grammar import Grammar

MASK64 = (1 << 64) - 1


class GenerationError(RuntimeError):
    """The grammar cannot yield the requested sentences within the limits."""


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)``."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            x = self.next()
            if x < limit:
                return x % k


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    count: int = 20
    max_depth: int = 64
    max_len: int = 40
    max_attempts: int = 1000

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be at least 1")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit natural")


def productive(g: Grammar) -> set[int]:
    """Nonterminals that derive at least one terminal string."""
    found: set[int] = set()
    changed = True
    while changed:
        changed = False
        for p in g.productions:
            if p.lhs not in found and all(
                    g.symbols[x].terminal or x in found for x in p.rhs):
                found.add(p.lhs)
                changed = True
    return found


def _attempt(g: Grammar, rng: SplitMix64, cfg: GenConfig):
    # leftmost expansion: the stack holds the unexpanded suffix, leftmost on top
    out = []
    stack = [(g.start.id, 0)]
    while stack:
        x, depth = stack.pop()
        if g.symbols[x].terminal:
            out.append(x)
            if len(out) > cfg.max_len:
                return None
            continue
        if depth >= cfg.max_depth:
            return None
        alts = g.by_lhs[x]
        p = alts[rng.below(len(alts))]
        stack.extend((y, depth + 1) for y in reversed(p.rhs))
    return tuple(g.names(out))


def generate_sentences(g: Grammar, cfg: GenConfig = GenConfig()) -> list[tuple[str, ...]]:
    """Draw ``cfg.count`` sentences of ``g``.

    Each sentence expands the leftmost nonterminal with a uniformly chosen
    alternative.  A derivation deeper than ``max_depth`` or longer than
    ``max_len`` terminals is abandoned and retried with fresh draws from the
    same stream.
    """
    if g.start.id not in productive(g):
        raise GenerationError(f"start symbol {g.start.name!r} derives no terminal string")
    rng = SplitMix64(cfg.seed)
    sentences = []
    for _ in range(cfg.count):
        for _ in range(cfg.max_attempts):
            s = _attempt(g, rng, cfg)
            if s is not None:
                sentences.append(s)
                break
        else:
            raise GenerationError(
                f"no sentence within max_depth={cfg.max_depth}, max_len={cfg.max_len} "
                f"after {cfg.max_attempts} attempts")
    return sentences
