"""Classic readability formulas as pure functions of their inputs.

Constants are the Brazilian Portuguese adaptations. Document-level
wrappers that derive the inputs from annotated text live in
``nilcmetrix.surface``.
"""
from __future__ import annotations

import math


def flesch_score(words_per_sentence: float, syllables_per_word: float) -> float:
    """Adapted Flesch reading ease: higher is easier."""
    return 248.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word


def dale_chall_score(pct_unfamiliar: float, words_per_sentence: float) -> float:
    """Adapted Dale-Chall; the unfamiliar percentage is on a 0-100 scale."""
    return 0.1579 * pct_unfamiliar + 0.0496 * words_per_sentence + 3.6365


def gunning_fog_score(words_per_sentence: float, pct_difficult: float) -> float:
    """Gunning Fog; the difficult-word percentage is on a 0-100 scale."""
    return 0.4 * (words_per_sentence + pct_difficult)


def brunet_index(n_tokens: int, n_types: int) -> float:
    """Brunet's W = N ** (V ** -0.165); lower means richer vocabulary."""
    return n_tokens ** (n_types ** -0.165)


def honore_statistic(n_tokens: int, n_types: int, n_hapax: int) -> float | None:
    """Honore's R = 100 ln(N) / (1 - V1/V); None when every type is a hapax."""
    if n_hapax == n_types:
        return None
    return 100.0 * math.log(n_tokens) / (1.0 - n_hapax / n_types)
