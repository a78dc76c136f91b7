"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s``).

Expected values are hand-derived oracles or independent brute-force
references implemented inside this module; tolerances are fixed here.
"""
import itertools
import math
import random
import time
from contextlib import contextmanager

import numpy as np
import pytest

from conftest import FIXTURES, one_para_doc, word_sent
from nilcmetrix import formulas
from nilcmetrix.cli import main as cli_main
from nilcmetrix.cohesion import lsa_group, lsa_span
from nilcmetrix.lexsem import psycholinguistic_profile, temporal_profile
from nilcmetrix.model import (
    ConstituencyNode,
    Document,
    Paragraph,
    Sentence,
    Token,
)
from nilcmetrix.registry import CATEGORIES, REGISTRY, compute_all, list_metrics
from nilcmetrix.resources import (
    ConnectiveEntry,
    ConnectiveLexicon,
    EmbeddingModel,
    NormScores,
    NormTable,
    ResourceBundle,
)
from nilcmetrix.state import DocState
from nilcmetrix.stats import compare_corpora, export_features, welch_t
from nilcmetrix.surface import sentence_length_classes
from nilcmetrix.syntax import frazier, yngve


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL")
        raise
    print(f"ACCEPTANCE {name}: PASS")


# --- 1. readability formula exactness -------------------------------------------

def test_readability_formula_exactness():
    with criterion("readability-formula-exactness"):
        start = time.monotonic()
        assert formulas.flesch_score(10, 2) == pytest.approx(69.485, abs=1e-9)
        assert formulas.dale_chall_score(10, 10) == pytest.approx(5.7115, abs=1e-9)
        assert formulas.gunning_fog_score(10, 20) == pytest.approx(12.0, abs=1e-9)
        assert formulas.brunet_index(100, 50) == pytest.approx(11.19, abs=0.01)
        assert formulas.honore_statistic(100, 50, 25) == pytest.approx(921.034, abs=1e-3)
        assert time.monotonic() - start < 1.0


# --- 2. partition invariants ------------------------------------------------------

def test_partition_invariants():
    with criterion("partition-invariants"):
        rng = random.Random(424242)

        # sentence-length classes over 1,000 randomized documents
        for _ in range(1000):
            lengths = [rng.randint(1, 40) for _ in range(rng.randint(1, 12))]
            doc = one_para_doc(*[word_sent(*(["casa"] * n)) for n in lengths])
            classes = sentence_length_classes(doc)
            assert abs(sum(classes.values()) - 1.0) <= 1e-9

        # psycholinguistic band ratios sum to one
        for _ in range(50):
            n = rng.randint(1, 15)
            scores = {
                f"w{i}": NormScores(*[rng.uniform(1, 7) for _ in range(4)])
                for i in range(n)
            }
            bundle = ResourceBundle(norms=NormTable(scores=scores))
            doc = one_para_doc(word_sent(*scores))
            values = psycholinguistic_profile(doc, bundle)
            for name in ("aoa", "concreteness", "familiarity", "imageability"):
                total = sum(
                    values[f"{name}_{band}_ratio"]
                    for band in ("1_25", "25_4", "4_55", "55_7")
                )
                assert abs(total - 1.0) <= 1e-9

        # tense shares sum to one on fully featured verbs
        combos = [
            ("Pres", "Ind"), ("Past", "Ind"), ("Imp", "Ind"), ("Fut", "Ind"),
            ("Pres", "Cnd"), ("Pres", "Sub"), ("Pres", "Imp"),
        ]
        share_keys = (
            "present_indicative_ratio", "preterite_indicative_ratio",
            "imperfect_indicative_ratio", "future_indicative_ratio",
            "conditional_ratio", "subjunctive_ratio", "imperative_ratio",
        )
        for _ in range(200):
            chosen = [rng.choice(combos) for _ in range(rng.randint(1, 10))]
            sentence = Sentence(
                tokens=tuple(
                    Token(
                        surface=f"v{i}", lemma=f"v{i}", pos="VERB",
                        morph={"Tense": t, "Mood": m, "VerbForm": "Fin"},
                        head=0 if i == 0 else 1,
                        deprel="root" if i == 0 else "conj",
                        index=i + 1,
                    )
                    for i, (t, m) in enumerate(chosen)
                )
            )
            values = temporal_profile(one_para_doc(sentence), ResourceBundle())
            assert abs(sum(values[k] for k in share_keys) - 1.0) <= 1e-9


# --- 3. welch oracle -----------------------------------------------------------------

def test_welch_oracle():
    with criterion("welch-oracle"):
        identical = welch_t([1, 2, 3], [1, 2, 3])
        assert identical.t == 0.0 and identical.p == 1.0

        fixed = welch_t([1, 2, 3, 4, 5], [2, 3, 4, 5, 6])
        assert fixed.t == pytest.approx(-1.0, abs=1e-12)
        assert fixed.df == pytest.approx(8.0, abs=1e-12)
        assert fixed.p == pytest.approx(0.3466, abs=5e-4)

        rng = random.Random(7)
        for _ in range(1000):
            a = [rng.gauss(0, 1 + rng.random()) for _ in range(rng.randint(2, 9))]
            b = [rng.gauss(rng.uniform(-1, 1), 1 + rng.random())
                 for _ in range(rng.randint(2, 9))]
            ab, ba = welch_t(a, b), welch_t(b, a)
            assert ab.t == pytest.approx(-ba.t, abs=1e-9)
            assert ab.p == pytest.approx(ba.p, abs=1e-9)


# --- 4. tree-complexity brute-force oracle ---------------------------------------------

def _enumerate_shapes(n_nodes):
    """All ordered rooted tree shapes with exactly n_nodes nodes.

    A shape is either the atom "leaf" or a tuple of child shapes.
    """
    if n_nodes == 1:
        return ["leaf"]
    shapes = []
    for first in range(1, n_nodes):
        rest = n_nodes - 1 - first
        for first_shape in _enumerate_shapes(first):
            if rest == 0:
                shapes.append((first_shape,))
            else:
                for sibling_tuple in _sibling_tuples(rest):
                    shapes.append((first_shape, *sibling_tuple))
    return shapes


def _sibling_tuples(n_nodes):
    tuples = []
    for first in range(1, n_nodes + 1):
        for first_shape in _enumerate_shapes(first):
            rest = n_nodes - first
            if rest == 0:
                tuples.append((first_shape,))
            else:
                for tail in _sibling_tuples(rest):
                    tuples.append((first_shape, *tail))
    return tuples


def _materialize(shape, labeler, depth=0, counter=None):
    if counter is None:
        counter = itertools.count(1)
    if shape == "leaf":
        return ConstituencyNode(label="w", leaf_token=next(counter))
    children = tuple(
        _materialize(child, labeler, depth + 1, counter) for child in shape
    )
    return ConstituencyNode(label=labeler(depth), children=children)


def _parents(tree):
    parent = {}
    stack = [tree]
    while stack:
        node = stack.pop()
        for child in node.children:
            parent[id(child)] = node
            stack.append(child)
    return parent


def _reference_yngve(tree):
    """Literal definition: per leaf, sum right-sibling counts over the
    nodes of its root path (root and leaf included)."""
    parent = _parents(tree)
    loads = []
    for leaf in tree.leaves():
        path = [leaf]
        while id(path[-1]) in parent:
            path.append(parent[id(path[-1])])
        load = 0
        for node in path:
            up = parent.get(id(node))
            if up is not None:
                position = [id(c) for c in up.children].index(id(node))
                load += len(up.children) - 1 - position
        loads.append(load)
    return sum(loads) / len(loads)


def _reference_frazier(tree, sentence_labels):
    """Literal definition: collect the maximal leftmost-child chain from
    each leaf (plus the root when the chain reaches it), then score each
    chain node 1, or 1.5 when its parent carries a sentence label."""
    parent = _parents(tree)
    scores = []
    for leaf in tree.leaves():
        chain = []
        current = leaf
        while id(current) in parent and parent[id(current)].children[0] is current:
            chain.append(current)
            current = parent[id(current)]
        if id(current) not in parent and (current is leaf is tree or chain):
            chain.append(current)  # walk reached the root
        if current is tree and current is leaf:
            chain = [current]
        score = 0.0
        for node in chain:
            up = parent.get(id(node))
            if up is not None and up.label in sentence_labels:
                score += 1.5
            else:
                score += 1.0
        scores.append(score)
    return sum(scores) / len(scores)


def test_tree_complexity_oracles():
    with criterion("tree-complexity-oracles"):
        start = time.monotonic()
        labels = frozenset({"S"})
        labelers = (
            lambda depth: "S",
            lambda depth: "NP",
            lambda depth: "S" if depth % 2 == 0 else "NP",
        )
        n_checked = 0
        for n_nodes in range(1, 9):
            for shape in _enumerate_shapes(n_nodes):
                for labeler in labelers:
                    tree = _materialize(shape, labeler)
                    if len(tree.leaves()) > 6:
                        continue
                    assert yngve(tree) == pytest.approx(
                        _reference_yngve(tree), abs=1e-12
                    )
                    assert frazier(tree, sentence_labels=labels) == pytest.approx(
                        _reference_frazier(tree, labels), abs=1e-12
                    )
                    n_checked += 1
        assert n_checked >= 1500
        assert time.monotonic() - start < 30.0


# --- 5. LSA invariants ---------------------------------------------------------------

def _lsa_metric_dict(doc, model):
    bundle = ResourceBundle(embeddings=model)
    return lsa_group(DocState(doc, bundle))


def test_lsa_invariants():
    with criterion("lsa-invariants"):
        dup_model = EmbeddingModel(
            dimension=2, vectors={"gato": np.array([1.0, 2.0])}
        )
        doc = one_para_doc(word_sent("gato"), word_sent("gato"))
        assert _lsa_metric_dict(doc, dup_model)["lsa_adj_mean"] == pytest.approx(1.0)

        span_model = EmbeddingModel(
            dimension=2,
            vectors={"a": np.array([1.0, 0.0]), "b": np.array([1.0, 1.0])},
        )
        span_doc = one_para_doc(word_sent("a"), word_sent("b"))
        span_value = lsa_span(span_doc, span_model)["mean"]
        assert 0.0 <= span_value <= 1.0
        assert span_value == pytest.approx(0.70711, abs=1e-5)

        # scaling invariance at factor 7.3 across every embedding metric
        rng = random.Random(99)
        words = [f"w{i}" for i in range(8)]
        vectors = {
            w: np.array([rng.uniform(-1, 1) for _ in range(3)]) for w in words
        }
        model = EmbeddingModel(dimension=3, vectors=vectors)
        scaled = EmbeddingModel(
            dimension=3, vectors={w: 7.3 * v for w, v in vectors.items()}
        )
        doc = Document(
            id="t",
            paragraphs=(
                Paragraph(sentences=(word_sent("w0", "w1"), word_sent("w2"))),
                Paragraph(sentences=(word_sent("w3", "w4"), word_sent("w5", "w6", "w7"))),
            ),
        )
        base = _lsa_metric_dict(doc, model)
        after = _lsa_metric_dict(doc, scaled)
        assert set(base) == set(after)
        for key, value in base.items():
            assert value is not None, key
            assert after[key] == pytest.approx(value, abs=1e-9), key
            if "span" in key and key.endswith("mean"):
                assert 0.0 <= value <= 1.0


# --- 6. directional corpus comparison ---------------------------------------------------

# all fillers (and the verb "fala") are 2-syllable words, so syllable
# statistics cannot differ between the two synthetic corpora
_FILLERS = ["casa", "gato", "pedra", "pano", "bola", "mesa", "porta", "rua"]


def _synthetic_sentence(rng, n_words, person, with_connective):
    tokens = []

    def add(surface, pos, morph=None, deprel="dep"):
        tokens.append(
            Token(
                surface=surface, lemma=surface.lower(), pos=pos,
                morph=morph or {}, head=0 if not tokens else 1,
                deprel="root" if not tokens else deprel, index=len(tokens) + 1,
            )
        )

    add("fala", "VERB", {"Tense": "Pres", "Mood": "Ind", "VerbForm": "Fin"})
    pron = "eu" if person == "1" else "ele"
    add(pron, "PRON", {"Person": person, "PronType": "Prs"})
    if with_connective:
        add("e", "CCONJ")
    while len(tokens) < n_words:
        add(rng.choice(_FILLERS), "NOUN")
    return Sentence(tokens=tuple(tokens))


def _synthetic_corpus(rng, n_docs, prefix, short, first_person_rate, connective_rate):
    docs = []
    for d in range(n_docs):
        sentences = []
        for _ in range(8):
            n_words = rng.randint(4, 6) if short else rng.randint(18, 22)
            person = "1" if rng.random() < first_person_rate else "3"
            with_conn = rng.random() < connective_rate
            sentences.append(_synthetic_sentence(rng, n_words, person, with_conn))
        docs.append(
            Document(id=f"{prefix}{d}", paragraphs=(Paragraph(sentences=tuple(sentences)),))
        )
    return docs


def test_directional_corpus_comparison():
    with criterion("directional-corpus-comparison"):
        start = time.monotonic()
        rng = random.Random(2024)
        lexicon = ConnectiveLexicon(
            entries=(ConnectiveEntry(form="e", kind="ADDITIVE", polarity="POSITIVE"),)
        )
        bundle = ResourceBundle(connectives=lexicon)
        # planted: A short sentences, first person, dense connectives;
        #          B long sentences, third person, sparse connectives
        corpus_a = _synthetic_corpus(rng, 25, "a", True, 0.9, 0.9)
        corpus_b = _synthetic_corpus(rng, 25, "b", False, 0.1, 0.1)
        features_a = export_features(corpus_a, bundle)
        features_b = export_features(corpus_b, bundle)
        report = compare_corpora(features_a, features_b, alpha=0.001)

        planted = {
            "words_per_sentence": "b",
            "conn_ratio": "a",
            "add_pos_conn_ratio": "a",
            "first_person_pronouns": "a",
            "third_person_pronouns": "b",
        }
        for metric, direction in planted.items():
            row = report.row(metric)
            assert row.significant, metric
            assert row.direction == direction, metric

        # descriptive metrics may move only with the planted length direction
        length_driven = {
            "words": "b", "words_per_sentence": "b", "words_per_sentence_max": "b",
            "words_per_sentence_min": "b", "words_per_sentence_sd": "b",
        }
        for row in report.rows:
            if row.category != "Descriptive Index" or not row.significant:
                continue
            assert row.metric in length_driven, f"unexpected descriptive hit {row.metric}"
            assert row.direction == length_driven[row.metric], row.metric

        # structurally identical dimensions stay quiet
        for metric in ("sentences", "paragraphs", "sentences_per_paragraph",
                       "heading_ratio", "syllables_per_content_word",
                       "negation_ratio", "or_ratio"):
            assert not report.row(metric).significant, metric
        assert time.monotonic() - start < 10.0


# --- 7. determinism ---------------------------------------------------------------------

def test_compute_determinism(tmp_path):
    with criterion("compute-determinism"):
        outputs = []
        for i, jobs in enumerate(("1", "1", "4")):
            out = tmp_path / f"d{i}.tsv"
            code = cli_main([
                "compute",
                "--input", str(FIXTURES / "corpus"),
                "--resources", str(FIXTURES / "resources" / "toy.manifest"),
                "--jobs", jobs,
                "--out", str(out),
            ])
            assert code == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1] == outputs[2]


# --- 8. catalog coverage -----------------------------------------------------------------

_TTR_IDS = [
    "ttr", "content_ttr", "function_ttr", "noun_ttr", "verb_ttr", "adjective_ttr",
    "pronoun_ttr", "indefinite_pronoun_ttr", "relative_pronoun_ttr",
    "preposition_ttr", "punctuation_ttr",
]
_NORM_IDS = [
    f"{n}_{s}"
    for n in ("aoa", "concreteness", "familiarity", "imageability")
    for s in ("mean", "std", "1_25_ratio", "25_4_ratio", "4_55_ratio", "55_7_ratio")
]
_FEATURE_TABLE_ANALOGUES = [
    # downstream feature ids this registry must expose (same or analogous name)
    "cross_entropy", "prepositions_per_sentence", "first_person_pronouns",
    "long_sentence_ratio", "content_density", "verbs_max", "prepositions_per_clause",
    "content_words", "adverbs_standard_deviation", "function_words",
    "ratio_function_to_content_words", "sentences_with_one_clause", "adj_arg_ovl",
    "dalechall_adapted", "content_word_max", "aoa_mean", "arg_ovl",
    "non_inflected_verbs", "pronouns_min",
    # syntactic-complexity comparison rows
    "words_before_main_verb", "adverbs_before_main_verb", "clauses_per_sentence",
    "coordinate_conjunctions_per_clause", "frazier", "non_svo_ratio",
    "relative_clauses_ratio", "subordinate_clauses_ratio", "yngve",
]
_NAMED_IDS = [
    "words", "paragraphs", "sentences", "sentences_per_paragraph",
    "syllables_per_content_word", "words_per_sentence", "words_per_sentence_max",
    "words_per_sentence_min", "words_per_sentence_sd", "heading_ratio",
    "short_sentence_ratio", "medium_sentence_ratio", "very_long_sentence_ratio",
    "easy_conjunction_ratio", "hard_conjunction_ratio", "first_person_pronoun_ratio",
    "simple_word_ratio",
    "adj_stem_ovl", "stem_ovl", "adj_cw_ovl", "cw_ovl", "adj_anaphoric_ref",
    "anaphoric_ref", "coreferent_pronouns_per_sentence",
    "lsa_adj_mean", "lsa_adj_sd", "lsa_paragraph_mean", "lsa_paragraph_sd",
    "lsa_all_mean", "lsa_all_sd", "lsa_givenness_mean", "lsa_givenness_sd",
    "lsa_span_mean", "lsa_span_sd",
    "conn_ratio", "add_pos_conn_ratio", "add_neg_conn_ratio", "cau_pos_conn_ratio",
    "cau_neg_conn_ratio", "log_pos_conn_ratio", "log_neg_conn_ratio",
    "and_ratio", "or_ratio", "if_ratio", "negation_ratio", "ambiguous_marker_ratio",
    "present_indicative_ratio", "preterite_indicative_ratio",
    "imperfect_indicative_ratio", "future_indicative_ratio", "conditional_ratio",
    "subjunctive_ratio", "imperative_ratio", "compound_tense_ratio",
    "distinct_tense_moods", "tmp_pos_conn_ratio", "tmp_neg_conn_ratio",
    "dep_distance", "adverbial_clauses_ratio", "passive_ratio",
    "postponed_subject_ratio", "infinitive_clauses_ratio",
    "gerund_clauses_ratio", "words_per_np", "words_per_np_max", "words_per_np_min",
    "nouns", "proper_nouns", "adjectives", "adverbs", "verbs", "inflected_verbs",
    "infinitive_verbs", "gerund_verbs", "participle_verbs", "pronouns",
    "prepositions", "second_person_pronouns", "third_person_pronouns",
    "relative_pronouns_ratio", "indefinite_pronouns_ratio",
    "positive_words_ratio", "negative_words_ratio", "content_word_ambiguity",
    "noun_ambiguity", "adjective_ambiguity", "verb_ambiguity", "adverb_ambiguity",
    "hypernyms_per_verb", "abstract_nouns_per_sentence", "abstract_nouns_ratio",
    "proper_nouns_ratio",
    "content_word_freq_a", "all_word_freq_a", "rare_content_word_freq_a",
    "rare_all_word_freq_a", "content_word_freq_b", "all_word_freq_b",
    "rare_content_word_freq_b", "rare_all_word_freq_b",
    "legacy_content_word_freq", "legacy_rarest_word_freq",
    "flesch", "gunning_fog", "brunet", "honore",
]


def test_catalog_coverage():
    with criterion("catalog-coverage"):
        catalog = list_metrics()
        ids = {m.id for m in catalog}
        assert len(catalog) >= 130
        assert {m.category for m in catalog} == set(CATEGORIES)
        required = set(
            _TTR_IDS + _NORM_IDS + _FEATURE_TABLE_ANALOGUES + _NAMED_IDS
        )
        missing = required - ids
        assert not missing, f"missing catalog ids: {sorted(missing)}"
