"""scikit-learn style front end: a recognizer as a classifier over sentences."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from .earley import recognize_earley
from .grammar import Grammar, parse_grammar, tau2_transform
from .variant import recognize_variant

ALGORITHMS = ("earley", "variant", "tau2-earley")
EARLEY_FEATURES = ("steps1", "steps2", "steps3", "seed", "total", "items")
VARIANT_FEATURES = ("steps1", "steps2", "steps3", "steps4", "steps5", "steps6",
                    "seed", "total", "uItems", "tItems")


def check_sentences(X) -> list[tuple[str, ...]]:
    """Normalize X to a list of token tuples.

    Accepts whitespace-separated strings or token sequences; a bare string is
    rejected since it is ambiguous between one sentence and many.
    """
    if isinstance(X, str):
        raise TypeError("expected a sequence of sentences, got a single string")
    out = []
    for s in X:
        if isinstance(s, str):
            out.append(tuple(s.split()))
        else:
            out.append(tuple(getattr(t, "name", t) for t in s))
    return out


def check_grammar(grammar) -> Grammar:
    if isinstance(grammar, Grammar):
        return grammar
    if isinstance(grammar, str):
        return parse_grammar(grammar)
    raise TypeError(f"grammar must be a Grammar or grammar text, not {type(grammar).__name__}")


class Recognizer(ClassifierMixin, BaseEstimator):
    """Membership classifier for the language of a context-free grammar.

    Parameters
    ----------
    grammar : Grammar or str
        The grammar, or its text.
    algorithm : {"earley", "variant", "tau2-earley"}
    order : {"fifo", "lifo"}
        Agenda discipline; results are identical either way.

    ``predict`` returns one boolean per sentence, ``transform`` the step and
    table-size counters of each run as an integer matrix.
    """

    def __init__(self, grammar=None, algorithm="earley", order="fifo"):
        self.grammar = grammar
        self.algorithm = algorithm
        self.order = order

    def fit(self, X=None, y=None):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}")
        if self.order not in ("fifo", "lifo"):
            raise ValueError(f"order must be 'fifo' or 'lifo', got {self.order!r}")
        self.grammar_ = check_grammar(self.grammar)
        self.parse_grammar_ = (tau2_transform(self.grammar_) if self.algorithm == "tau2-earley"
                               else self.grammar_)
        self.classes_ = np.array([False, True])
        self.feature_names_out_ = np.array(
            VARIANT_FEATURES if self.algorithm == "variant" else EARLEY_FEATURES, dtype=object)
        return self

    def _run(self, sentence):
        if self.algorithm == "variant":
            return recognize_variant(self.parse_grammar_, sentence, self.order)[2]
        return recognize_earley(self.parse_grammar_, sentence, self.order)[1]

    def predict(self, X):
        check_is_fitted(self, "grammar_")
        return np.array([self._run(s).accepted for s in check_sentences(X)], dtype=bool)

    def transform(self, X):
        check_is_fitted(self, "grammar_")
        rows = []
        for s in check_sentences(X):
            d = self._run(s).as_dict()
            rows.append([d[k] for k in self.feature_names_out_])
        return np.array(rows, dtype=np.int64).reshape(-1, len(self.feature_names_out_))

    def fit_transform(self, X, y=None):
        return self.fit(X, y).transform(X)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_
