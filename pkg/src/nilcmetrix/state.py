"""Per-document computation state shared by the metric modules.

DocState memoizes grouped computations so that the registry can evaluate
every metric exactly once without repeating work. All aggregates follow
the MISSING policy: an aggregate over an empty set is None, never zero.
"""
from __future__ import annotations

import math
from functools import cached_property

from .model import Document, Sentence, Token
from .resources import ResourceBundle


def mean(values) -> float | None:
    vals = list(values)
    if not vals:
        return None
    return sum(vals) / len(vals)


def pstdev(values) -> float | None:
    """Population standard deviation; None on an empty sample."""
    vals = list(values)
    if not vals:
        return None
    m = sum(vals) / len(vals)
    return math.sqrt(sum((v - m) ** 2 for v in vals) / len(vals))


def ratio(numerator: float, denominator: float) -> float | None:
    if denominator == 0:
        return None
    return numerator / denominator


def in_word_set(token: Token, word_set) -> bool:
    """Membership by lowercase surface, falling back to the lemma."""
    return token.surface_lower in word_set or token.lemma_lower in word_set


def lookup(token: Token, getter) -> object | None:
    """Resource lookup by surface form first, then lemma; None when OOV."""
    value = getter(token.surface_lower)
    if value is None and token.lemma_lower != token.surface_lower:
        value = getter(token.lemma_lower)
    return value


class DocState:
    """A document, its resource bundle, and cached derived data."""

    def __init__(self, doc: Document, bundle: ResourceBundle):
        self.doc = doc
        self.bundle = bundle
        self._groups: dict = {}

    # -- capability checks used by metric requirements ------------------

    def has(self, requirement: str) -> bool:
        if requirement == "pos":
            return self.doc.has_pos()
        if requirement == "dep":
            return self.doc.has_deps()
        if requirement == "tree":
            return self.doc.has_trees()
        if requirement.startswith("resource:"):
            name = requirement.split(":", 1)[1]
            if name == "freq_a":
                return self.bundle.freq_table("corpus-A") is not None
            if name == "freq_b":
                return self.bundle.freq_table("corpus-B") is not None
            if name == "freq_legacy":
                return self.bundle.legacy_freq is not None
            return getattr(self.bundle, name, None) is not None
        raise ValueError(f"unknown requirement {requirement!r}")

    def group(self, name: str, compute) -> dict:
        if name not in self._groups:
            self._groups[name] = compute(self)
        return self._groups[name]

    # -- widely shared token views ---------------------------------------

    @cached_property
    def sentences(self) -> list:
        return self.doc.sentences

    @cached_property
    def words(self) -> list:
        return self.doc.words

    @cached_property
    def content_words(self) -> list:
        return [t for t in self.words if t.is_content]

    @cached_property
    def function_words(self) -> list:
        return [t for t in self.words if not t.is_content]

    @cached_property
    def sentence_words(self) -> list:
        return [s.words for s in self.sentences]

    @cached_property
    def clause_counts(self) -> list:
        """Per-sentence clause counts: finite verbs, floored at one."""
        return [
            max(sum(1 for t in s.tokens if t.is_finite_verb), 1)
            for s in self.sentences
        ]

    @cached_property
    def finite_verb_total(self) -> int:
        return sum(1 for t in self.doc.tokens if t.is_finite_verb)

    @cached_property
    def connective_matches(self) -> list:
        """Per-sentence connective matches (empty when no lexicon)."""
        from .resources import match_connectives

        if self.bundle.connectives is None:
            return [[] for _ in self.sentences]
        return [match_connectives(s, self.bundle.connectives) for s in self.sentences]
