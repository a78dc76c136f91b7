"""Psycholinguistic norms, semantic word information, morphosyntactic
densities, connective ratios and the temporal (tense/mood) profile.
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import Document
from .resources import EMPTY_BUNDLE, NEGATION_WORDS, ResourceBundle
from .state import DocState, lookup, mean, pstdev, ratio

NORM_NAMES = ("aoa", "concreteness", "familiarity", "imageability")

#: Band edges on the 1-7 norm scale: [1,2.5) [2.5,4) [4,5.5) [5.5,7].
NORM_BANDS = ((1.0, 2.5), (2.5, 4.0), (4.0, 5.5), (5.5, 7.0))
_BAND_KEYS = ("1_25", "25_4", "4_55", "55_7")


@dataclass(frozen=True)
class NormSummary:
    mean: float
    sd: float
    bands: tuple  # four ratios, ordered as NORM_BANDS


def _band_index(score: float) -> int:
    for i, (lo, hi) in enumerate(NORM_BANDS[:-1]):
        if lo <= score < hi:
            return i
    return 3  # [5.5, 7] closed at the top


def psycholinguistic_group(state: DocState) -> dict:
    out = {}
    table = state.bundle.norms
    covered = []
    if table is not None:
        for token in state.content_words:
            scores = lookup(token, table.get)
            if scores is not None:
                covered.append(scores)
    for name in NORM_NAMES:
        values = [getattr(s, name) for s in covered]
        out[f"{name}_mean"] = mean(values)
        out[f"{name}_std"] = pstdev(values)
        counts = [0, 0, 0, 0]
        for v in values:
            counts[_band_index(v)] += 1
        for key, c in zip(_BAND_KEYS, counts):
            out[f"{name}_{key}_ratio"] = ratio(c, len(values))
    return out


def psycholinguistic_profile(doc: Document, bundle: ResourceBundle) -> dict:
    """24 values: mean, sd and four band ratios per psycholinguistic norm."""
    return psycholinguistic_group(DocState(doc, bundle))


def norm_summary(doc: Document, bundle: ResourceBundle, name: str) -> NormSummary | None:
    g = psycholinguistic_profile(doc, bundle)
    if g[f"{name}_mean"] is None:
        return None
    return NormSummary(
        mean=g[f"{name}_mean"],
        sd=g[f"{name}_std"],
        bands=tuple(g[f"{name}_{key}_ratio"] for key in _BAND_KEYS),
    )


def semantic_group(state: DocState) -> dict:
    bundle = state.bundle
    words = state.words
    n_words = len(words)

    positive = negative = None
    if bundle.polarity is not None:
        pols = [lookup(t, bundle.polarity.get) for t in words]
        positive = ratio(sum(1 for p in pols if p == "POSITIVE"), n_words)
        negative = ratio(sum(1 for p in pols if p == "NEGATIVE"), n_words)

    def ambiguity(tokens, pos_filter=None) -> float | None:
        if bundle.senses is None:
            return None
        counts = []
        for t in tokens:
            if pos_filter is not None and t.pos != pos_filter:
                continue
            pos_key = "NOUN" if t.pos == "PROPN" else t.pos
            n = bundle.senses.sense_count(t.lemma_lower, pos_key)
            if n is None:
                n = bundle.senses.sense_count(t.surface_lower, pos_key)
            if n is not None:
                counts.append(n)
        return mean(counts)

    hypernyms = None
    if bundle.senses is not None:
        per_sentence = []
        for sentence in state.sentences:
            counts = []
            for t in sentence.tokens:
                if t.pos != "VERB":
                    continue
                n = bundle.senses.hypernym_count(t.lemma_lower)
                if n is None:
                    n = bundle.senses.hypernym_count(t.surface_lower)
                if n is not None:
                    counts.append(n)
            if counts:
                per_sentence.append(sum(counts) / len(counts))
        hypernyms = mean(per_sentence)

    abstract_sentence = abstract_text = None
    if bundle.abstract_nouns is not None:
        per_sentence = []
        total = 0
        for ws in state.sentence_words:
            hits = sum(
                1
                for t in ws
                if t.pos == "NOUN"
                and (t.surface_lower in bundle.abstract_nouns or t.lemma_lower in bundle.abstract_nouns)
            )
            total += hits
            r = ratio(hits, len(ws))
            if r is not None:
                per_sentence.append(r)
        abstract_sentence = mean(per_sentence)
        abstract_text = ratio(total, n_words)

    return {
        "positive_words_ratio": positive,
        "negative_words_ratio": negative,
        "content_word_ambiguity": ambiguity(state.content_words),
        "noun_ambiguity": ambiguity(words, "NOUN"),
        "adjective_ambiguity": ambiguity(words, "ADJ"),
        "verb_ambiguity": ambiguity(words, "VERB"),
        "adverb_ambiguity": ambiguity(words, "ADV"),
        "hypernyms_per_verb": hypernyms,
        "abstract_nouns_per_sentence": abstract_sentence,
        "abstract_nouns_ratio": abstract_text,
        "proper_nouns_ratio": ratio(sum(1 for t in words if t.pos == "PROPN"), n_words),
    }


def semantic_word_info(doc: Document, bundle: ResourceBundle) -> dict:
    return semantic_group(DocState(doc, bundle))


_NONFINITE_FORMS = ("Inf", "Ger", "Part")
_STAT_CLASSES = (
    ("nouns", ("NOUN",)),
    ("verbs", ("VERB",)),
    ("adjectives", ("ADJ",)),
    ("adverbs", ("ADV",)),
    ("pronouns", ("PRON",)),
)


def morphosyntactic_group(state: DocState) -> dict:
    words = state.words
    n_words = len(words)
    n_sentences = len(state.sentences)
    total_clauses = sum(state.clause_counts)

    def count(pred) -> int:
        return sum(1 for t in words if pred(t))

    def incidence(pred) -> float | None:
        return ratio(count(pred), n_words)

    verbs = [t for t in words if t.pos == "VERB"]
    preps = count(lambda t: t.pos == "ADP")
    prons = [t for t in words if t.pos == "PRON"]
    personal = [t for t in prons if t.is_personal_pronoun]

    out = {
        "content_words": ratio(len(state.content_words), n_words),
        "function_words": ratio(len(state.function_words), n_words),
        "nouns": incidence(lambda t: t.pos == "NOUN"),
        "proper_nouns": incidence(lambda t: t.pos == "PROPN"),
        "adjectives": incidence(lambda t: t.pos == "ADJ"),
        "adverbs": incidence(lambda t: t.pos == "ADV"),
        "verbs": ratio(len(verbs), n_words),
        "inflected_verbs": ratio(
            sum(1 for t in verbs if t.feat("VerbForm") == "Fin"), n_words
        ),
        "non_inflected_verbs": ratio(
            sum(1 for t in verbs if t.feat("VerbForm") in _NONFINITE_FORMS), n_words
        ),
        "infinitive_verbs": ratio(
            sum(1 for t in verbs if t.feat("VerbForm") == "Inf"), n_words
        ),
        "gerund_verbs": ratio(
            sum(1 for t in verbs if t.feat("VerbForm") == "Ger"), n_words
        ),
        "participle_verbs": ratio(
            sum(1 for t in verbs if t.feat("VerbForm") == "Part"), n_words
        ),
        "pronouns": ratio(len(prons), n_words),
        "prepositions": ratio(preps, n_words),
        "prepositions_per_sentence": ratio(preps, n_sentences),
        "prepositions_per_clause": ratio(preps, total_clauses),
        "first_person_pronouns": ratio(
            sum(1 for t in personal if t.feat("Person") == "1"), len(personal)
        ),
        "second_person_pronouns": ratio(
            sum(1 for t in personal if t.feat("Person") == "2"), len(personal)
        ),
        "third_person_pronouns": ratio(
            sum(1 for t in personal if t.feat("Person") == "3"), len(personal)
        ),
        "relative_pronouns_ratio": ratio(
            sum(1 for t in prons if t.feat("PronType") == "Rel"), len(prons)
        ),
        "indefinite_pronouns_ratio": ratio(
            sum(1 for t in prons if t.feat("PronType") == "Ind"), len(prons)
        ),
        "ratio_function_to_content_words": ratio(
            len(state.function_words), len(state.content_words)
        ),
    }

    for stat_name, tags in _STAT_CLASSES:
        per_sentence = []
        for ws in state.sentence_words:
            r = ratio(sum(1 for t in ws if t.pos in tags), len(ws))
            if r is not None:
                per_sentence.append(r)
        out[f"{stat_name}_mean"] = mean(per_sentence)
        out[f"{stat_name}_standard_deviation"] = pstdev(per_sentence)
        out[f"{stat_name}_min"] = min(per_sentence) if per_sentence else None
        out[f"{stat_name}_max"] = max(per_sentence) if per_sentence else None
    return out


def morphosyntactic_profile(doc: Document) -> dict:
    """The 42-value morphosyntactic density family."""
    return morphosyntactic_group(DocState(doc, EMPTY_BUNDLE))


def connective_group(state: DocState) -> dict:
    words = state.words
    n_words = len(words)
    lexicon = state.bundle.connectives
    negation = ratio(
        sum(1 for t in words if t.surface_lower in NEGATION_WORDS), n_words
    )
    if lexicon is None:
        return {
            "conn_ratio": None,
            "add_pos_conn_ratio": None,
            "add_neg_conn_ratio": None,
            "cau_pos_conn_ratio": None,
            "cau_neg_conn_ratio": None,
            "log_pos_conn_ratio": None,
            "log_neg_conn_ratio": None,
            "and_ratio": ratio(sum(1 for t in words if t.surface_lower == "e"), n_words),
            "or_ratio": ratio(sum(1 for t in words if t.surface_lower == "ou"), n_words),
            "if_ratio": ratio(sum(1 for t in words if t.surface_lower == "se"), n_words),
            "negation_ratio": negation,
            "ambiguous_marker_ratio": None,
            "tmp_pos_conn_ratio": None,
            "tmp_neg_conn_ratio": None,
        }

    matched_tokens = 0
    kind_spans: dict = {}
    ambiguous_spans = 0
    for matches in state.connective_matches:
        spans = {(m.start, m.length) for m in matches}
        matched_tokens += sum(length for _, length in spans)
        for span in spans:
            forms = {m.form for m in matches if (m.start, m.length) == span}
            if any(len(lexicon.kinds_of(f)) > 1 for f in forms):
                ambiguous_spans += 1
        for m in matches:
            kind_spans.setdefault((m.kind, m.polarity), set()).add((m.start, m.length))

    def kind_ratio(kind: str, polarity: str) -> float | None:
        return ratio(len(kind_spans.get((kind, polarity), ())), n_words)

    return {
        "conn_ratio": ratio(matched_tokens, n_words),
        "add_pos_conn_ratio": kind_ratio("ADDITIVE", "POSITIVE"),
        "add_neg_conn_ratio": kind_ratio("ADDITIVE", "NEGATIVE"),
        "cau_pos_conn_ratio": kind_ratio("CAUSAL", "POSITIVE"),
        "cau_neg_conn_ratio": kind_ratio("CAUSAL", "NEGATIVE"),
        "log_pos_conn_ratio": kind_ratio("LOGICAL", "POSITIVE"),
        "log_neg_conn_ratio": kind_ratio("LOGICAL", "NEGATIVE"),
        "and_ratio": ratio(sum(1 for t in words if t.surface_lower == "e"), n_words),
        "or_ratio": ratio(sum(1 for t in words if t.surface_lower == "ou"), n_words),
        "if_ratio": ratio(sum(1 for t in words if t.surface_lower == "se"), n_words),
        "negation_ratio": negation,
        "ambiguous_marker_ratio": ratio(ambiguous_spans, n_words),
        "tmp_pos_conn_ratio": kind_ratio("TEMPORAL", "POSITIVE"),
        "tmp_neg_conn_ratio": kind_ratio("TEMPORAL", "NEGATIVE"),
    }


def connective_ratios(doc: Document, bundle: ResourceBundle) -> dict:
    """12 connective values; the temporal pair reports under temporal_profile."""
    g = connective_group(DocState(doc, bundle))
    return {k: v for k, v in g.items() if not k.startswith("tmp_")}


#: Compound tenses are detected from these auxiliary lemmas.
_COMPOUND_AUX = frozenset({"ter", "haver", "ser", "estar"})


def temporal_group(state: DocState) -> dict:
    finite = [t for t in state.doc.tokens if t.is_finite_verb]
    n_finite = len(finite)

    def share(pred) -> float | None:
        return ratio(sum(1 for t in finite if pred(t)), n_finite)

    compounds = 0
    for sentence in state.sentences:
        for t in sentence.tokens:
            if t.pos != "AUX" or t.lemma_lower not in _COMPOUND_AUX:
                continue
            head = sentence.tokens[t.head - 1] if t.head else None
            follower = (
                next(
                    (w for w in sentence.tokens[t.index:] if w.is_word),
                    None,
                )
            )
            if (head is not None and head.pos == "VERB" and head.feat("VerbForm") == "Part") or (
                follower is not None
                and follower.pos == "VERB"
                and follower.feat("VerbForm") == "Part"
            ):
                compounds += 1

    combos = {
        (t.feat("Tense") or "", t.feat("Mood") or "")
        for t in finite
    }

    conn = (
        state.group("connectives", connective_group)
        if state.bundle.connectives is not None
        else None
    )

    return {
        "present_indicative_ratio": share(
            lambda t: t.feat("Tense") == "Pres" and t.feat("Mood") == "Ind"
        ),
        "preterite_indicative_ratio": share(
            lambda t: t.feat("Tense") == "Past" and t.feat("Mood") == "Ind"
        ),
        "imperfect_indicative_ratio": share(
            lambda t: t.feat("Tense") == "Imp" and t.feat("Mood") == "Ind"
        ),
        "future_indicative_ratio": share(
            lambda t: t.feat("Tense") == "Fut" and t.feat("Mood") == "Ind"
        ),
        "conditional_ratio": share(lambda t: t.feat("Mood") == "Cnd"),
        "subjunctive_ratio": share(lambda t: t.feat("Mood") == "Sub"),
        "imperative_ratio": share(lambda t: t.feat("Mood") == "Imp"),
        "compound_tense_ratio": ratio(compounds, n_finite),
        "distinct_tense_moods": float(len(combos)),
        "tmp_pos_conn_ratio": conn["tmp_pos_conn_ratio"] if conn else None,
        "tmp_neg_conn_ratio": conn["tmp_neg_conn_ratio"] if conn else None,
    }


def temporal_profile(doc: Document, bundle: ResourceBundle) -> dict:
    return temporal_group(DocState(doc, bundle))
