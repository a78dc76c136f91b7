"""Metric registry: stable identifiers, the 14-category taxonomy, and the
total, deterministic computation pipeline.

Every metric declares its requirements (pos/dep/tree annotation or a
named resource). compute_all evaluates each registered metric exactly
once; unmet requirements, empty denominators and unexpected per-metric
failures all surface as MISSING (None), never as an aborted run.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import cohesion, lexsem, surface, syntax
from .model import Document
from .resources import EMPTY_BUNDLE, ResourceBundle
from .state import DocState

CATEGORIES = (
    "Descriptive Index",
    "Text Easability Metrics",
    "Referential Cohesion",
    "LSA-Semantic Cohesion",
    "Psycholinguistic Measures",
    "Lexical Diversity",
    "Connectives",
    "Temporal Lexicon",
    "Syntactic Complexity",
    "Syntactic Pattern Density",
    "Morphosyntactic Word Information",
    "Semantic Word Information",
    "Word Frequency",
    "Readability Formulas",
)

MISSING = None


@dataclass(frozen=True)
class MetricId:
    id: str
    category: str
    requires: tuple
    description: str


@dataclass(frozen=True)
class Metric:
    id: str
    category: str
    requires: tuple          # each item: "req" or "req_a|req_b" (any-of)
    description: str
    group: str
    key: str

    def available(self, state: DocState) -> bool:
        return all(
            any(state.has(alt) for alt in requirement.split("|"))
            for requirement in self.requires
        )


_GROUP_FNS = {
    "descriptive": surface.descriptive_group,
    "length_classes": surface.length_class_group,
    "easability": surface.easability_group,
    "lexdiv": surface.lexical_diversity_group,
    "wordfreq": surface.word_frequency_group,
    "readability": surface.readability_group,
    "psycholinguistic": lexsem.psycholinguistic_group,
    "semantic": lexsem.semantic_group,
    "morphosyntactic": lexsem.morphosyntactic_group,
    "connectives": lexsem.connective_group,
    "temporal": lexsem.temporal_group,
    "syntax": syntax.syntax_group,
    "pattern_density": syntax.pattern_density_group,
    "referential": cohesion.referential_group,
    "lsa": cohesion.lsa_group,
    "cross_entropy": cohesion.cross_entropy_group,
}


def _m(metric_id, category, requires, description, group, key=None):
    return Metric(
        id=metric_id,
        category=category,
        requires=tuple(requires),
        description=description,
        group=group,
        key=key or metric_id,
    )


def _build_registry() -> tuple:
    metrics: list[Metric] = []
    add = metrics.append

    # ---- Descriptive Index ------------------------------------------------
    d = "Descriptive Index"
    add(_m("words", d, (), "number of words in the text", "descriptive"))
    add(_m("paragraphs", d, (), "number of paragraphs in the text", "descriptive"))
    add(_m("sentences", d, (), "number of sentences in the text", "descriptive"))
    add(_m("sentences_per_paragraph", d, (), "mean sentences per paragraph", "descriptive"))
    add(_m("syllables_per_content_word", d, ("pos",),
           "mean syllables per content word", "descriptive"))
    add(_m("words_per_sentence", d, (), "mean words per sentence", "descriptive"))
    add(_m("words_per_sentence_max", d, (), "maximum words per sentence", "descriptive"))
    add(_m("words_per_sentence_min", d, (), "minimum words per sentence", "descriptive"))
    add(_m("words_per_sentence_sd", d, (),
           "population standard deviation of words per sentence", "descriptive"))
    add(_m("heading_ratio", d, (), "heading paragraphs over sentences", "descriptive"))

    # ---- Text Easability Metrics ------------------------------------------
    e = "Text Easability Metrics"
    add(_m("short_sentence_ratio", e, (), "sentences of at most 11 words", "length_classes"))
    add(_m("medium_sentence_ratio", e, (), "sentences of exactly 12 words", "length_classes"))
    add(_m("long_sentence_ratio", e, (), "sentences of 13 to 15 words", "length_classes"))
    add(_m("very_long_sentence_ratio", e, (), "sentences above 15 words", "length_classes"))
    add(_m("easy_conjunction_ratio", e, ("pos", "resource:easy_conjunctions"),
           "easy conjunctions over words", "easability"))
    add(_m("hard_conjunction_ratio", e, ("pos", "resource:hard_conjunctions"),
           "difficult conjunctions over words", "easability"))
    add(_m("first_person_pronoun_ratio", e, ("pos",),
           "first-person share of personal pronouns", "easability"))
    add(_m("simple_word_ratio", e,
           ("pos", "resource:simple_words|resource:concrete_words"),
           "content words found in the simple/concrete lists", "easability"))

    # ---- Referential Cohesion ----------------------------------------------
    r = "Referential Cohesion"
    add(_m("adj_arg_ovl", r, ("pos",),
           "argument (noun/pronoun lemma) overlap between adjacent sentences",
           "referential"))
    add(_m("arg_ovl", r, ("pos",),
           "argument overlap over all sentence pairs", "referential"))
    add(_m("adj_stem_ovl", r, ("pos",),
           "content-stem overlap between adjacent sentences", "referential"))
    add(_m("stem_ovl", r, ("pos",),
           "content-stem overlap over all sentence pairs", "referential"))
    add(_m("adj_cw_ovl", r, ("pos",),
           "shared content lemmas between adjacent sentences", "referential"))
    add(_m("cw_ovl", r, ("pos",),
           "shared content lemmas over all sentence pairs", "referential"))
    add(_m("adj_anaphoric_ref", r, ("pos",),
           "pronouns with an agreeing noun in the previous sentence", "referential"))
    add(_m("anaphoric_ref", r, ("pos",),
           "pronouns with an agreeing noun in any previous sentence", "referential"))
    add(_m("coreferent_pronouns_per_sentence", r, ("pos",),
           "mean pronouns per sentence with a nearby agreeing noun", "referential"))

    # ---- LSA-Semantic Cohesion ----------------------------------------------
    l = "LSA-Semantic Cohesion"
    emb = ("resource:embeddings",)
    add(_m("lsa_adj_mean", l, emb, "mean cosine of adjacent sentence vectors", "lsa"))
    add(_m("lsa_adj_sd", l, emb, "sd of adjacent sentence cosines", "lsa"))
    add(_m("lsa_paragraph_mean", l, emb, "mean cosine of adjacent paragraph vectors", "lsa"))
    add(_m("lsa_paragraph_sd", l, emb, "sd of adjacent paragraph cosines", "lsa"))
    add(_m("lsa_all_mean", l, emb, "mean cosine over all sentence pairs", "lsa"))
    add(_m("lsa_all_sd", l, emb, "sd of cosines over all sentence pairs", "lsa"))
    add(_m("lsa_givenness_mean", l, emb,
           "mean cosine of each sentence to the mean of its predecessors", "lsa"))
    add(_m("lsa_givenness_sd", l, emb, "sd of the givenness scores", "lsa"))
    add(_m("lsa_span_mean", l, emb,
           "mean fraction of each sentence vector inside the span of its predecessors",
           "lsa"))
    add(_m("lsa_span_sd", l, emb, "sd of the span scores", "lsa"))
    add(_m("cross_entropy", l, (),
           "mean add-one unigram cross-entropy of adjacent sentence pairs",
           "cross_entropy"))

    # ---- Psycholinguistic Measures -------------------------------------------
    p = "Psycholinguistic Measures"
    norms = ("pos", "resource:norms")
    band_desc = {
        "1_25": "scores in [1, 2.5)",
        "25_4": "scores in [2.5, 4)",
        "4_55": "scores in [4, 5.5)",
        "55_7": "scores in [5.5, 7]",
    }
    for norm_name, label in (
        ("aoa", "age of acquisition"),
        ("concreteness", "concreteness"),
        ("familiarity", "familiarity"),
        ("imageability", "imageability"),
    ):
        add(_m(f"{norm_name}_mean", p, norms,
               f"mean {label} of covered content words", "psycholinguistic"))
        add(_m(f"{norm_name}_std", p, norms,
               f"sd of {label} over covered content words", "psycholinguistic"))
        for band_key, desc in band_desc.items():
            add(_m(f"{norm_name}_{band_key}_ratio", p, norms,
                   f"share of covered words with {label} {desc}", "psycholinguistic"))

    # ---- Lexical Diversity -----------------------------------------------------
    x = "Lexical Diversity"
    add(_m("ttr", x, (), "type-token ratio over all words", "lexdiv"))
    add(_m("content_ttr", x, ("pos",), "type-token ratio over content words", "lexdiv"))
    add(_m("function_ttr", x, ("pos",), "type-token ratio over function words", "lexdiv"))
    add(_m("noun_ttr", x, ("pos",), "type-token ratio over nouns", "lexdiv"))
    add(_m("verb_ttr", x, ("pos",), "type-token ratio over verbs", "lexdiv"))
    add(_m("adjective_ttr", x, ("pos",), "type-token ratio over adjectives", "lexdiv"))
    add(_m("pronoun_ttr", x, ("pos",), "type-token ratio over pronouns", "lexdiv"))
    add(_m("indefinite_pronoun_ttr", x, ("pos",),
           "type-token ratio over indefinite pronouns", "lexdiv"))
    add(_m("relative_pronoun_ttr", x, ("pos",),
           "type-token ratio over relative pronouns", "lexdiv"))
    add(_m("preposition_ttr", x, ("pos",), "type-token ratio over prepositions", "lexdiv"))
    add(_m("punctuation_ttr", x, ("pos",), "type-token ratio over punctuation", "lexdiv"))
    add(_m("content_density", x, ("pos",),
           "content words over function words", "lexdiv"))
    add(_m("content_word_max", x, ("pos",),
           "maximum per-sentence content-word proportion", "lexdiv"))

    # ---- Connectives ------------------------------------------------------------
    c = "Connectives"
    conn = ("resource:connectives",)
    add(_m("conn_ratio", c, conn, "matched connective tokens over words", "connectives"))
    add(_m("add_pos_conn_ratio", c, conn, "positive additive connectives over words",
           "connectives"))
    add(_m("add_neg_conn_ratio", c, conn, "negative additive connectives over words",
           "connectives"))
    add(_m("cau_pos_conn_ratio", c, conn, "positive causal connectives over words",
           "connectives"))
    add(_m("cau_neg_conn_ratio", c, conn, "negative causal connectives over words",
           "connectives"))
    add(_m("log_pos_conn_ratio", c, conn, "positive logical connectives over words",
           "connectives"))
    add(_m("log_neg_conn_ratio", c, conn, "negative logical connectives over words",
           "connectives"))
    add(_m("and_ratio", c, (), "tokens 'e' over words", "connectives"))
    add(_m("or_ratio", c, (), "tokens 'ou' over words", "connectives"))
    add(_m("if_ratio", c, (), "tokens 'se' over words", "connectives"))
    add(_m("negation_ratio", c, (), "negation words over words", "connectives"))
    add(_m("ambiguous_marker_ratio", c, conn,
           "matched markers registered under more than one kind, over words",
           "connectives"))

    # ---- Temporal Lexicon ----------------------------------------------------------
    t = "Temporal Lexicon"
    tense = ("pos",)
    add(_m("present_indicative_ratio", t, tense,
           "present indicative share of finite verbs", "temporal"))
    add(_m("preterite_indicative_ratio", t, tense,
           "preterite indicative share of finite verbs", "temporal"))
    add(_m("imperfect_indicative_ratio", t, tense,
           "imperfect indicative share of finite verbs", "temporal"))
    add(_m("future_indicative_ratio", t, tense,
           "future indicative share of finite verbs", "temporal"))
    add(_m("conditional_ratio", t, tense, "conditional share of finite verbs", "temporal"))
    add(_m("subjunctive_ratio", t, tense, "subjunctive share of finite verbs", "temporal"))
    add(_m("imperative_ratio", t, tense, "imperative share of finite verbs", "temporal"))
    add(_m("compound_tense_ratio", t, tense,
           "auxiliary-plus-participle compounds over finite verbs", "temporal"))
    add(_m("distinct_tense_moods", t, tense,
           "distinct tense-mood combinations in the text", "temporal"))
    add(_m("tmp_pos_conn_ratio", t, ("resource:connectives",),
           "positive temporal connectives over words", "temporal"))
    add(_m("tmp_neg_conn_ratio", t, ("resource:connectives",),
           "negative temporal connectives over words", "temporal"))

    # ---- Syntactic Complexity ---------------------------------------------------------
    s = "Syntactic Complexity"
    dep = ("dep",)
    add(_m("yngve", s, ("tree",), "mean Yngve load over constituency leaves", "syntax"))
    add(_m("frazier", s, ("tree",), "mean Frazier score over constituency leaves", "syntax"))
    add(_m("dep_distance", s, dep, "mean dependency arc length", "syntax"))
    add(_m("words_before_main_verb", s, dep,
           "mean words before the main verb", "syntax"))
    add(_m("adverbs_before_main_verb", s, dep,
           "mean adverbs before the main verb", "syntax"))
    add(_m("clauses_per_sentence", s, ("pos",), "finite verbs over sentences", "syntax"))
    add(_m("sentences_with_one_clause", s, ("pos",),
           "share of sentences with exactly one finite verb", "syntax"))
    add(_m("coordinate_conjunctions_per_clause", s, ("pos",),
           "coordinating conjunctions over clauses", "syntax"))
    add(_m("subordinate_clauses_ratio", s, dep, "subordinate clauses over clauses", "syntax"))
    add(_m("relative_clauses_ratio", s, dep, "relative clauses over clauses", "syntax"))
    add(_m("adverbial_clauses_ratio", s, dep, "adverbial clauses over clauses", "syntax"))
    add(_m("passive_ratio", s, dep, "passive clauses over clauses", "syntax"))
    add(_m("non_svo_ratio", s, dep, "non-canonical-order clauses over clauses", "syntax"))
    add(_m("postponed_subject_ratio", s, dep,
           "clauses with the subject after the verb, over clauses", "syntax"))
    add(_m("infinitive_clauses_ratio", s, dep, "infinitive clauses over clauses", "syntax"))

    # ---- Syntactic Pattern Density ---------------------------------------------------
    y = "Syntactic Pattern Density"
    add(_m("gerund_clauses_ratio", y, dep, "gerund clauses over clauses", "pattern_density"))
    add(_m("words_per_np", y, dep, "mean words per noun phrase", "pattern_density"))
    add(_m("words_per_np_max", y, dep, "maximum words per noun phrase", "pattern_density"))
    add(_m("words_per_np_min", y, dep, "minimum words per noun phrase", "pattern_density"))

    # ---- Morphosyntactic Word Information -----------------------------------------------
    w = "Morphosyntactic Word Information"
    pos = ("pos",)
    for metric_id, desc in (
        ("content_words", "content words over words"),
        ("function_words", "function words over words"),
        ("nouns", "nouns over words"),
        ("proper_nouns", "proper nouns over words"),
        ("adjectives", "adjectives over words"),
        ("adverbs", "adverbs over words"),
        ("verbs", "verbs over words"),
        ("inflected_verbs", "finite verbs over words"),
        ("non_inflected_verbs", "non-finite verbs over words"),
        ("infinitive_verbs", "infinitive verbs over words"),
        ("gerund_verbs", "gerund verbs over words"),
        ("participle_verbs", "participle verbs over words"),
        ("pronouns", "pronouns over words"),
        ("prepositions", "prepositions over words"),
        ("prepositions_per_sentence", "prepositions over sentences"),
        ("prepositions_per_clause", "prepositions over clauses"),
        ("first_person_pronouns", "first-person share of personal pronouns"),
        ("second_person_pronouns", "second-person share of personal pronouns"),
        ("third_person_pronouns", "third-person share of personal pronouns"),
        ("relative_pronouns_ratio", "relative pronouns over pronouns"),
        ("indefinite_pronouns_ratio", "indefinite pronouns over pronouns"),
        ("ratio_function_to_content_words", "function words over content words"),
    ):
        add(_m(metric_id, w, pos, desc, "morphosyntactic"))
    for stat_name, label in (
        ("nouns", "noun"), ("verbs", "verb"), ("adjectives", "adjective"),
        ("adverbs", "adverb"), ("pronouns", "pronoun"),
    ):
        add(_m(f"{stat_name}_mean", w, pos,
               f"mean per-sentence {label} incidence", "morphosyntactic"))
        add(_m(f"{stat_name}_standard_deviation", w, pos,
               f"sd of per-sentence {label} incidence", "morphosyntactic"))
        add(_m(f"{stat_name}_min", w, pos,
               f"minimum per-sentence {label} incidence", "morphosyntactic"))
        add(_m(f"{stat_name}_max", w, pos,
               f"maximum per-sentence {label} incidence", "morphosyntactic"))

    # ---- Semantic Word Information ------------------------------------------------------
    v = "Semantic Word Information"
    add(_m("positive_words_ratio", v, ("resource:polarity",),
           "positive-polarity words over words", "semantic"))
    add(_m("negative_words_ratio", v, ("resource:polarity",),
           "negative-polarity words over words", "semantic"))
    add(_m("content_word_ambiguity", v, ("pos", "resource:senses"),
           "mean sense count of covered content words", "semantic"))
    add(_m("noun_ambiguity", v, ("pos", "resource:senses"),
           "mean sense count of covered nouns", "semantic"))
    add(_m("adjective_ambiguity", v, ("pos", "resource:senses"),
           "mean sense count of covered adjectives", "semantic"))
    add(_m("verb_ambiguity", v, ("pos", "resource:senses"),
           "mean sense count of covered verbs", "semantic"))
    add(_m("adverb_ambiguity", v, ("pos", "resource:senses"),
           "mean sense count of covered adverbs", "semantic"))
    add(_m("hypernyms_per_verb", v, ("pos", "resource:senses"),
           "mean hypernym count per verb, averaged over sentences", "semantic"))
    add(_m("abstract_nouns_per_sentence", v, ("pos", "resource:abstract_nouns"),
           "mean per-sentence abstract-noun proportion", "semantic"))
    add(_m("abstract_nouns_ratio", v, ("pos", "resource:abstract_nouns"),
           "abstract nouns over words", "semantic"))
    add(_m("proper_nouns_ratio", v, ("pos",), "proper nouns over words", "semantic"))

    # ---- Word Frequency ---------------------------------------------------------------
    f = "Word Frequency"
    for role, req in (("a", "resource:freq_a"), ("b", "resource:freq_b")):
        add(_m(f"content_word_freq_{role}", f, ("pos", req),
               f"mean zipf of content words (corpus {role.upper()})", "wordfreq"))
        add(_m(f"all_word_freq_{role}", f, (req,),
               f"mean zipf of all words (corpus {role.upper()})", "wordfreq"))
        add(_m(f"rare_content_word_freq_{role}", f, ("pos", req),
               f"mean per-sentence minimum content-word zipf (corpus {role.upper()})",
               "wordfreq"))
        add(_m(f"rare_all_word_freq_{role}", f, (req,),
               f"mean per-sentence minimum word zipf (corpus {role.upper()})", "wordfreq"))
    add(_m("legacy_content_word_freq", f, ("pos", "resource:freq_legacy"),
           "mean raw frequency of content words (legacy corpus)", "wordfreq"))
    add(_m("legacy_rarest_word_freq", f, ("resource:freq_legacy",),
           "mean per-sentence minimum raw frequency (legacy corpus)", "wordfreq"))

    # ---- Readability Formulas ------------------------------------------------------------
    rf = "Readability Formulas"
    add(_m("flesch", rf, (), "adapted Flesch reading ease", "readability"))
    add(_m("dalechall_adapted", rf, ("resource:simple_words",),
           "adapted Dale-Chall grade", "readability"))
    add(_m("gunning_fog", rf, (), "Gunning Fog index", "readability"))
    add(_m("brunet", rf, (), "Brunet index", "readability"))
    add(_m("honore", rf, (), "Honore statistic", "readability"))

    ids = [m.id for m in metrics]
    if len(ids) != len(set(ids)):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise RuntimeError(f"duplicate metric ids in registry: {dupes}")
    return tuple(metrics)


REGISTRY: tuple = _build_registry()
_BY_ID = {m.id: m for m in REGISTRY}


def list_metrics() -> list:
    """The full catalog, in stable registry order."""
    return [
        MetricId(id=m.id, category=m.category, requires=m.requires,
                 description=m.description)
        for m in REGISTRY
    ]


def metric_ids() -> list:
    return [m.id for m in REGISTRY]


@dataclass(frozen=True)
class MetricVector:
    doc_id: str
    values: dict                 # metric id -> float | None, registry order
    diagnostics: dict = field(default_factory=dict)

    def __getitem__(self, metric_id: str) -> float | None:
        return self.values[metric_id]


def compute_all(doc: Document, bundle: ResourceBundle = EMPTY_BUNDLE) -> MetricVector:
    """Evaluate every registered metric; never raises on a valid Document."""
    state = DocState(doc, bundle)
    values: dict = {}
    diagnostics: dict = {}
    for metric in REGISTRY:
        if not metric.available(state):
            values[metric.id] = MISSING
            diagnostics[metric.id] = "requirements not met: " + ", ".join(metric.requires)
            continue
        try:
            group = state.group(metric.group, _GROUP_FNS[metric.group])
            value = group.get(metric.key)
        except Exception as exc:  # per-metric failures must not abort the run
            values[metric.id] = MISSING
            diagnostics[metric.id] = f"{type(exc).__name__}: {exc}"
            continue
        if value is None:
            values[metric.id] = MISSING
            diagnostics.setdefault(metric.id, "undefined for this input")
        else:
            values[metric.id] = float(value)
    return MetricVector(doc_id=doc.id, values=values, diagnostics=diagnostics)
