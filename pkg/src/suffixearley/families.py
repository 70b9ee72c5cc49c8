"""Small named grammars used by the tests, the report and the CLI demos."""

from .grammar import Grammar, parse_grammar

WORKED_EXAMPLE = """\
S -> A B
A -> C
B -> C
C -> a C
C ->
"""

# A -> A1 A2 A3 A4 is predicted at 0, 1 and 2; from each origin A1 reaches
# position 3, A2 and A3 follow, and A4 (d) never occurs in "a a a b c".
CONVERGE = """\
%start S
S -> A | P A
P -> a | a a
A -> A1 A2 A3 A4
A1 -> a | a a | a a a
A2 -> b
A3 -> c
A4 -> d
"""
CONVERGE_INPUT = ("a", "a", "a", "b", "c")


def worked_example() -> Grammar:
    return parse_grammar(WORKED_EXAMPLE)


def converge() -> Grammar:
    return parse_grammar(CONVERGE)


def suffix_sharing_text(k: int = 10, tail_len: int = 8) -> str:
    """``k`` start rules ``S -> K_i P Q R`` sharing the suffix ``P Q R``.

    Every ``K_i`` also derives ``k``, so all ``k`` recognition processes for
    the shared suffix run in parallel from the same position.  ``L`` is a
    long rule shared with nothing, which is where the two-normal-form cover
    pays extra items.
    """
    lines = []
    for i in range(1, k + 1):
        lines.append(f"S -> K{i} P Q R")
        lines.append(f"K{i} -> k | k{i}")
    lines += ["P -> p", "Q -> q", "R -> r | r S | r L",
              "L -> " + " ".join(f"t{j}" for j in range(1, tail_len + 1))]
    return "\n".join(lines) + "\n"


def suffix_sharing(k: int = 10, tail_len: int = 8) -> Grammar:
    return parse_grammar(suffix_sharing_text(k, tail_len))
