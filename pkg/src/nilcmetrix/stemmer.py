"""Deterministic suffix-stripping stemmer for Brazilian Portuguese.

A compact rule cascade in the spirit of the RSLP stemmer: plural and
feminine reduction first, then derivational and verbal suffixes. The goal
is conflating morphological relatives for stem-overlap cohesion metrics
(abolir / abolição -> abol), not linguistic perfection. Rules are frozen;
alternative stemmers can be passed wherever a ``stem`` callable is taken.
"""
from __future__ import annotations

import unicodedata

# (suffix, minimum stem length left after stripping, replacement)
_PLURAL_RULES = [
    ("ões", 3, "ão"),
    ("ães", 2, "ão"),
    ("ais", 2, "al"),
    ("éis", 2, "el"),
    ("eis", 2, "el"),
    ("óis", 2, "ol"),
    ("ns", 2, "m"),
    ("les", 3, "l"),
    ("res", 3, "r"),
    ("s", 2, ""),
]

_DERIVATIONAL_RULES = [
    ("amente", 3, ""),
    ("mente", 3, ""),
    ("idade", 3, ""),
    ("ização", 4, ""),
    ("izaç", 4, ""),
    ("ação", 2, ""),
    ("aç", 2, ""),
    ("ções", 2, ""),
    ("ção", 2, ""),
    ("ância", 3, ""),
    ("ência", 3, ""),
    ("mento", 3, ""),
    ("adora", 3, ""),
    ("ador", 3, ""),
    ("ista", 3, ""),
    ("ável", 2, ""),
    ("ível", 2, ""),
    ("oso", 3, ""),
    ("osa", 3, ""),
    ("eza", 3, ""),
    ("ismo", 3, ""),
]

_VERB_RULES = [
    ("aríamos", 2, ""), ("eríamos", 2, ""), ("iríamos", 2, ""),
    ("ássemos", 2, ""), ("êssemos", 2, ""), ("íssemos", 2, ""),
    ("aremos", 2, ""), ("eremos", 2, ""), ("iremos", 2, ""),
    ("ávamos", 2, ""), ("íamos", 2, ""),
    ("aram", 2, ""), ("eram", 2, ""), ("iram", 2, ""),
    ("arão", 2, ""), ("erão", 2, ""), ("irão", 2, ""),
    ("ando", 2, ""), ("endo", 2, ""), ("indo", 2, ""),
    ("amos", 2, ""), ("emos", 2, ""), ("imos", 2, ""),
    ("aria", 2, ""), ("eria", 2, ""), ("iria", 2, ""),
    ("asse", 2, ""), ("esse", 2, ""), ("isse", 2, ""),
    ("ava", 2, ""), ("iam", 2, ""),
    ("ado", 2, ""), ("ido", 2, ""),
    ("ara", 2, ""), ("era", 2, ""), ("irá", 2, ""),
    ("am", 2, ""), ("em", 2, ""),
    ("ar", 2, ""), ("er", 2, ""), ("ir", 2, ""),
    ("ou", 2, ""), ("eu", 2, ""), ("iu", 2, ""),
    ("a", 3, ""), ("e", 3, ""), ("o", 3, ""),
]


def _apply(word: str, rules) -> str:
    for suffix, min_len, repl in rules:
        if word.endswith(suffix) and len(word) - len(suffix) >= min_len:
            return word[: len(word) - len(suffix)] + repl
    return word


def stem(word: str) -> str:
    """Stem one lowercase-able Portuguese word form."""
    w = unicodedata.normalize("NFC", word).lower()
    w = _apply(w, _PLURAL_RULES)
    reduced = _apply(w, _DERIVATIONAL_RULES)
    if reduced == w:
        reduced = _apply(w, _VERB_RULES)
    # Strip residual thematic vowel/accents so verb and noun stems meet.
    reduced = _strip_accents(reduced)
    if len(reduced) > 3 and reduced[-1] in "aeiou":
        reduced = reduced[:-1]
    return reduced


def _strip_accents(word: str) -> str:
    decomposed = unicodedata.normalize("NFD", word)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))
