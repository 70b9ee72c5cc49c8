"""Earley recognition and its suffix-item variant, with step and table-size counters."""

from .bench import ComparisonRow, RunRecord, compare, render_report
from .earley import EarleyChart, EarleyStats, chart_query, recognize_earley
from .grammar import (DottedItem, Grammar, GrammarError, Production, SuffixItem, Symbol,
                      UnknownTerminalError, dotted_items, parse_grammar, serialize_grammar,
                      suffix_items, tau2_transform)
from .oracle import (check_prop_earley, check_prop_variant, count_acyclic_parses, derives,
                     enumerate_language)
from .sentgen import GenConfig, GenerationError, SplitMix64, generate_sentences
from .variant import (BackwardTable, ForwardArray, VariantStats, backward_query, forward_query,
                      recognize_variant)

__version__ = "0.1.0"


def __getattr__(name):
    # sklearn is heavy to import; load the estimator only on demand
    if name == "Recognizer":
        from .estimator import Recognizer
        return Recognizer
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
