"""Descriptive statistics, text easability, lexical diversity, word
frequency and the five readability formulas.

Conventions: "words" are tokens that are not PUNCT/SYM; types are
lowercase surface forms; standard deviations are population deviations;
syllable-based statistics consider only tokens with letters in them.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import formulas
from .model import Document
from .resources import EMPTY_BUNDLE, ResourceBundle, zipf
from .state import DocState, in_word_set, lookup, mean, pstdev, ratio
from .syllables import word_syllables


@dataclass(frozen=True)
class SurfaceProfile:
    words: int
    sentences: int
    paragraphs: int
    sentences_per_paragraph: float
    syllables_per_content_word: float | None
    words_per_sentence: float
    words_per_sentence_max: float
    words_per_sentence_min: float
    words_per_sentence_sd: float
    heading_ratio: float


def descriptive_group(state: DocState) -> dict:
    doc = state.doc
    lengths = [len(ws) for ws in state.sentence_words]
    n_sentences = len(state.sentences)
    syl = [word_syllables(t.surface) for t in state.content_words]
    syl = [s for s in syl if s is not None]
    headings = sum(1 for p in doc.paragraphs if p.is_heading)
    return {
        "words": float(len(state.words)),
        "sentences": float(n_sentences),
        "paragraphs": float(len(doc.paragraphs)),
        "sentences_per_paragraph": n_sentences / len(doc.paragraphs),
        "syllables_per_content_word": mean(syl),
        "words_per_sentence": mean(lengths),
        "words_per_sentence_max": float(max(lengths)) if lengths else None,
        "words_per_sentence_min": float(min(lengths)) if lengths else None,
        "words_per_sentence_sd": pstdev(lengths),
        "heading_ratio": ratio(headings, n_sentences),
    }


def descriptive_index(doc: Document) -> SurfaceProfile:
    g = descriptive_group(DocState(doc, EMPTY_BUNDLE))
    return SurfaceProfile(
        words=int(g["words"]),
        sentences=int(g["sentences"]),
        paragraphs=int(g["paragraphs"]),
        sentences_per_paragraph=g["sentences_per_paragraph"],
        syllables_per_content_word=g["syllables_per_content_word"],
        words_per_sentence=g["words_per_sentence"],
        words_per_sentence_max=g["words_per_sentence_max"],
        words_per_sentence_min=g["words_per_sentence_min"],
        words_per_sentence_sd=g["words_per_sentence_sd"],
        heading_ratio=g["heading_ratio"],
    )


# Sentence length classes; the overlapping published boundaries are
# resolved half-open: short <= 11, medium = 12, long 13..15, very long > 15.
def length_class_group(state: DocState) -> dict:
    lengths = [len(ws) for ws in state.sentence_words]
    n = len(lengths)
    short = sum(1 for w in lengths if w <= 11)
    medium = sum(1 for w in lengths if w == 12)
    long_ = sum(1 for w in lengths if 13 <= w <= 15)
    very_long = sum(1 for w in lengths if w > 15)
    return {
        "short_sentence_ratio": ratio(short, n),
        "medium_sentence_ratio": ratio(medium, n),
        "long_sentence_ratio": ratio(long_, n),
        "very_long_sentence_ratio": ratio(very_long, n),
    }


def sentence_length_classes(doc: Document) -> dict:
    return length_class_group(DocState(doc, EMPTY_BUNDLE))


def easability_group(state: DocState) -> dict:
    bundle = state.bundle
    words = state.words
    n_words = len(words)

    def conj_ratio(word_set) -> float | None:
        if word_set is None:
            return None
        hits = sum(
            1
            for t in words
            if t.pos in ("CCONJ", "SCONJ") and in_word_set(t, word_set)
        )
        return ratio(hits, n_words)

    personal = [t for t in words if t.is_personal_pronoun]
    first = sum(1 for t in personal if t.feat("Person") == "1")

    simple_ratio = None
    if bundle.simple_words is not None or bundle.concrete_words is not None:
        content = state.content_words
        if content:
            hits = 0
            for t in content:
                in_simple = bundle.simple_words is not None and in_word_set(t, bundle.simple_words)
                in_concrete = (
                    bundle.concrete_words is not None and in_word_set(t, bundle.concrete_words)
                )
                if in_simple or in_concrete:
                    hits += 1
            simple_ratio = hits / len(content)

    return {
        "easy_conjunction_ratio": conj_ratio(bundle.easy_conjunctions),
        "hard_conjunction_ratio": conj_ratio(bundle.hard_conjunctions),
        "first_person_pronoun_ratio": ratio(first, len(personal)),
        "simple_word_ratio": simple_ratio,
    }


def easability(doc: Document, bundle: ResourceBundle) -> dict:
    return easability_group(DocState(doc, bundle))


def _ttr(tokens) -> float | None:
    if not tokens:
        return None
    surfaces = [t.surface_lower for t in tokens]
    return len(set(surfaces)) / len(surfaces)


def lexical_diversity_group(state: DocState) -> dict:
    words = state.words
    punct = [t for t in state.doc.tokens if t.pos == "PUNCT"]
    prons = [t for t in words if t.pos == "PRON"]
    per_sentence_content = [
        ratio(sum(1 for t in ws if t.is_content), len(ws))
        for ws in state.sentence_words
    ]
    per_sentence_content = [v for v in per_sentence_content if v is not None]
    return {
        "ttr": _ttr(words),
        "content_ttr": _ttr(state.content_words),
        "function_ttr": _ttr(state.function_words),
        "noun_ttr": _ttr([t for t in words if t.pos == "NOUN"]),
        "verb_ttr": _ttr([t for t in words if t.pos == "VERB"]),
        "adjective_ttr": _ttr([t for t in words if t.pos == "ADJ"]),
        "pronoun_ttr": _ttr(prons),
        "indefinite_pronoun_ttr": _ttr([t for t in prons if t.feat("PronType") == "Ind"]),
        "relative_pronoun_ttr": _ttr([t for t in prons if t.feat("PronType") == "Rel"]),
        "preposition_ttr": _ttr([t for t in words if t.pos == "ADP"]),
        "punctuation_ttr": _ttr(punct),
        "content_density": ratio(len(state.content_words), len(state.function_words)),
        "content_word_max": max(per_sentence_content) if per_sentence_content else None,
    }


def lexical_diversity(doc: Document) -> dict:
    return lexical_diversity_group(DocState(doc, EMPTY_BUNDLE))


def _freq_values(state: DocState, table) -> dict:
    """Mean zipf over content/all words plus per-sentence rarest means."""
    if table is None:
        return {"cw": None, "all": None, "rare_cw": None, "rare_all": None}

    def zipfs(tokens):
        out = []
        for t in tokens:
            fpm = lookup(t, table.get)
            if fpm is not None:
                out.append(zipf(fpm))
        return out

    rare_cw = []
    rare_all = []
    for sentence in state.sentences:
        sw = [t for t in sentence.tokens if t.is_word]
        zs_all = zipfs(sw)
        zs_cw = zipfs([t for t in sw if t.is_content])
        if zs_all:
            rare_all.append(min(zs_all))
        if zs_cw:
            rare_cw.append(min(zs_cw))
    return {
        "cw": mean(zipfs(state.content_words)),
        "all": mean(zipfs(state.words)),
        "rare_cw": mean(rare_cw),
        "rare_all": mean(rare_all),
    }


def word_frequency_group(state: DocState) -> dict:
    values_a = _freq_values(state, state.bundle.freq_table("corpus-A"))
    values_b = _freq_values(state, state.bundle.freq_table("corpus-B"))

    legacy = state.bundle.legacy_freq
    legacy_cw = None
    legacy_rarest = None
    if legacy is not None:
        raw = [
            f for f in (lookup(t, legacy.get) for t in state.content_words)
            if f is not None
        ]
        legacy_cw = mean(raw)
        minima = []
        for sentence in state.sentences:
            fs = [
                f
                for f in (
                    lookup(t, legacy.get) for t in sentence.tokens if t.is_word
                )
                if f is not None
            ]
            if fs:
                minima.append(min(fs))
        legacy_rarest = mean(minima)

    return {
        "content_word_freq_a": values_a["cw"],
        "all_word_freq_a": values_a["all"],
        "rare_content_word_freq_a": values_a["rare_cw"],
        "rare_all_word_freq_a": values_a["rare_all"],
        "content_word_freq_b": values_b["cw"],
        "all_word_freq_b": values_b["all"],
        "rare_content_word_freq_b": values_b["rare_cw"],
        "rare_all_word_freq_b": values_b["rare_all"],
        "legacy_content_word_freq": legacy_cw,
        "legacy_rarest_word_freq": legacy_rarest,
    }


def word_frequency(doc: Document, bundle: ResourceBundle) -> dict:
    return word_frequency_group(DocState(doc, bundle))


def readability_group(state: DocState) -> dict:
    words = state.words
    n_words = len(words)
    n_sentences = len(state.sentences)
    if n_words == 0 or n_sentences == 0:
        return {
            "flesch": None,
            "dalechall_adapted": None,
            "gunning_fog": None,
            "brunet": None,
            "honore": None,
        }
    asl = n_words / n_sentences

    syllables = [word_syllables(t.surface) for t in words]
    known = [s for s in syllables if s is not None]
    asw = mean(known)
    flesch = formulas.flesch_score(asl, asw) if asw is not None else None

    difficult = sum(1 for s in syllables if s is not None and s > 2)
    fog = formulas.gunning_fog_score(asl, 100.0 * difficult / n_words)

    dalechall = None
    if state.bundle.simple_words is not None:
        unfamiliar = sum(
            1 for t in words if not in_word_set(t, state.bundle.simple_words)
        )
        dalechall = formulas.dale_chall_score(100.0 * unfamiliar / n_words, asl)

    counts = Counter(t.surface_lower for t in words)
    n_types = len(counts)
    hapax = sum(1 for c in counts.values() if c == 1)
    return {
        "flesch": flesch,
        "dalechall_adapted": dalechall,
        "gunning_fog": fog,
        "brunet": formulas.brunet_index(n_words, n_types),
        "honore": formulas.honore_statistic(n_words, n_types, hapax),
    }


def flesch(doc: Document) -> float | None:
    return readability_group(DocState(doc, EMPTY_BUNDLE))["flesch"]


def dale_chall_adapted(doc: Document, bundle: ResourceBundle) -> float | None:
    return readability_group(DocState(doc, bundle))["dalechall_adapted"]


def gunning_fog(doc: Document) -> float | None:
    return readability_group(DocState(doc, EMPTY_BUNDLE))["gunning_fog"]


def brunet(doc: Document) -> float | None:
    return readability_group(DocState(doc, EMPTY_BUNDLE))["brunet"]


def honore(doc: Document) -> float | None:
    return readability_group(DocState(doc, EMPTY_BUNDLE))["honore"]
