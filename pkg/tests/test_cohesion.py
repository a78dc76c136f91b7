import math

import numpy as np
import pytest

from conftest import one_para_doc, sent, word_sent
from nilcmetrix.cohesion import (
    cross_entropy,
    lsa_givenness,
    lsa_similarities,
    lsa_span,
    referential_overlaps,
    sentence_vector,
)
from nilcmetrix.model import Document, Paragraph
from nilcmetrix.resources import EMPTY_BUNDLE, EmbeddingModel


def model_of(dim=2, **vectors):
    return EmbeddingModel(
        dimension=dim,
        vectors={w: np.array(v, dtype=np.float64) for w, v in vectors.items()},
    )


# --- referential overlaps ----------------------------------------------------

def test_identical_sentences_full_overlap():
    s1 = word_sent("gato", "casa")
    s2 = word_sent("gato", "casa")
    values = referential_overlaps(one_para_doc(s1, s2), EMPTY_BUNDLE)
    assert values["adj_arg_ovl"] == pytest.approx(1.0)
    assert values["adj_cw_ovl"] == pytest.approx(1.0)
    assert values["arg_ovl"] == pytest.approx(1.0)
    assert values["adj_stem_ovl"] == pytest.approx(1.0)


def test_half_shared_content_lemmas():
    s1 = word_sent("gato", "casa")
    s2 = word_sent("gato", "sol")
    values = referential_overlaps(one_para_doc(s1, s2), EMPTY_BUNDLE)
    assert values["adj_cw_ovl"] == pytest.approx(0.5)


def test_single_sentence_adjacent_missing():
    values = referential_overlaps(one_para_doc(word_sent("gato")), EMPTY_BUNDLE)
    assert values["adj_arg_ovl"] is None
    assert values["arg_ovl"] is None
    assert values["adj_cw_ovl"] is None


def test_stem_overlap_conflates_morphology():
    s1 = sent(("abolir", "VERB"))
    s2 = sent(("abolição", "NOUN"))
    values = referential_overlaps(one_para_doc(s1, s2), EMPTY_BUNDLE)
    assert values["adj_stem_ovl"] == pytest.approx(1.0)
    # lemma-based content overlap does not conflate them
    assert values["adj_cw_ovl"] == pytest.approx(0.0)


def test_anaphoric_reference_agreement():
    s1 = sent(("gata", "NOUN", {"Gender": "Fem", "Number": "Sing"}))
    s2 = sent(("Ela", "PRON", {"Gender": "Fem", "Number": "Sing",
                               "Person": "3", "PronType": "Prs"}),
              ("dorme", "VERB", {"VerbForm": "Fin"}))
    values = referential_overlaps(one_para_doc(s1, s2), EMPTY_BUNDLE)
    assert values["adj_anaphoric_ref"] == pytest.approx(1.0)
    assert values["coreferent_pronouns_per_sentence"] == pytest.approx(0.5)


def test_anaphoric_reference_gender_mismatch():
    s1 = sent(("gato", "NOUN", {"Gender": "Masc", "Number": "Sing"}))
    s2 = sent(("Ela", "PRON", {"Gender": "Fem", "Number": "Sing",
                               "Person": "3", "PronType": "Prs"}),
              ("dorme", "VERB", {"VerbForm": "Fin"}))
    values = referential_overlaps(one_para_doc(s1, s2), EMPTY_BUNDLE)
    assert values["adj_anaphoric_ref"] == pytest.approx(0.0)


# --- sentence vectors -----------------------------------------------------------

def test_single_known_word_vector():
    model = model_of(gato=(1.0, 0.0))
    vec = sentence_vector(word_sent("gato"), model)
    assert np.allclose(vec.values, [1.0, 0.0])
    assert vec.coverage == pytest.approx(1.0)


def test_two_word_mean_vector():
    model = model_of(a=(1.0, 0.0), b=(0.0, 1.0))
    vec = sentence_vector(word_sent("a", "b"), model)
    assert np.allclose(vec.values, [0.5, 0.5])


def test_fully_oov_zero_vector():
    model = model_of(outro=(1.0, 0.0))
    vec = sentence_vector(word_sent("gato"), model)
    assert np.allclose(vec.values, [0.0, 0.0])
    assert vec.coverage == 0.0


# --- similarities ----------------------------------------------------------------

def test_repeated_sentence_adjacent_one():
    model = model_of(gato=(1.0, 2.0))
    doc = one_para_doc(word_sent("gato"), word_sent("gato"))
    values = lsa_similarities(doc, model)
    assert values["adj_mean"] == pytest.approx(1.0)
    assert values["adj_sd"] == pytest.approx(0.0)


def test_orthogonal_adjacent_zero():
    model = model_of(a=(1.0, 0.0), b=(0.0, 1.0))
    doc = one_para_doc(word_sent("a"), word_sent("b"))
    assert lsa_similarities(doc, model)["adj_mean"] == pytest.approx(0.0)


def test_cosine_hand_value():
    model = model_of(a=(1.0, 0.0), b=(1.0, 1.0))
    doc = one_para_doc(word_sent("a"), word_sent("b"))
    assert lsa_similarities(doc, model)["adj_mean"] == pytest.approx(0.70711, abs=1e-5)


def test_single_sentence_missing():
    model = model_of(a=(1.0, 0.0))
    doc = one_para_doc(word_sent("a"))
    values = lsa_similarities(doc, model)
    assert values["adj_mean"] is None
    assert values["all_mean"] is None


def test_paragraph_similarity():
    model = model_of(a=(1.0, 0.0), b=(1.0, 0.0))
    doc = Document(
        id="t",
        paragraphs=(
            Paragraph(sentences=(word_sent("a"),)),
            Paragraph(sentences=(word_sent("b"),)),
        ),
    )
    values = lsa_similarities(doc, model)
    assert values["para_mean"] == pytest.approx(1.0)


def test_zero_vector_pairs_skipped():
    model = model_of(a=(1.0, 0.0), b=(0.0, 1.0))
    doc = one_para_doc(word_sent("a"), word_sent("oov"), word_sent("b"))
    values = lsa_similarities(doc, model)
    # adjacent pairs (a,oov) and (oov,b) are skipped: no valid adjacent pair
    assert values["adj_mean"] is None
    # all-pairs keeps (a, b)
    assert values["all_mean"] == pytest.approx(0.0)


# --- givenness --------------------------------------------------------------------

def test_givenness_identical_sentences():
    model = model_of(a=(2.0, 1.0))
    doc = one_para_doc(word_sent("a"), word_sent("a"), word_sent("a"))
    values = lsa_givenness(doc, model)
    assert values["mean"] == pytest.approx(1.0)
    assert values["sd"] == pytest.approx(0.0)


def test_givenness_orthogonal_second():
    model = model_of(a=(1.0, 0.0), b=(0.0, 1.0))
    doc = one_para_doc(word_sent("a"), word_sent("b"))
    assert lsa_givenness(doc, model)["mean"] == pytest.approx(0.0)


def test_givenness_three_sentence_hand_fixture():
    model = model_of(a=(1.0, 0.0), b=(0.0, 1.0), c=(1.0, 1.0))
    doc = one_para_doc(word_sent("a"), word_sent("b"), word_sent("c"))
    # term for b: cos(b, a) = 0
    # term for c: history mean = (0.5, 0.5); cos(c, mean) = 1
    values = lsa_givenness(doc, model)
    assert values["mean"] == pytest.approx(0.5)
    assert values["sd"] == pytest.approx(0.5)


def test_givenness_single_sentence_missing():
    model = model_of(a=(1.0, 0.0))
    assert lsa_givenness(one_para_doc(word_sent("a")), model)["mean"] is None


# --- span -------------------------------------------------------------------------

def test_span_inside_predecessors():
    model = model_of(a=(1.0, 0.0), b=(2.0, 0.0))
    doc = one_para_doc(word_sent("a"), word_sent("b"))
    assert lsa_span(doc, model)["mean"] == pytest.approx(1.0)


def test_span_orthogonal_zero():
    model = model_of(a=(1.0, 0.0), b=(0.0, 1.0))
    doc = one_para_doc(word_sent("a"), word_sent("b"))
    assert lsa_span(doc, model)["mean"] == pytest.approx(0.0)


def test_span_hand_projection():
    # v = (1,1) against span{(1,0)}: projection norm 1, |v| = sqrt(2)
    model = model_of(a=(1.0, 0.0), b=(1.0, 1.0))
    doc = one_para_doc(word_sent("a"), word_sent("b"))
    assert lsa_span(doc, model)["mean"] == pytest.approx(1 / math.sqrt(2), abs=1e-5)


def test_span_two_basis_vectors_cover_plane():
    model = model_of(a=(1.0, 0.0), b=(1.0, 1.0), c=(-3.0, 2.0))
    doc = one_para_doc(word_sent("a"), word_sent("b"), word_sent("c"))
    # by the third sentence the basis spans the whole plane
    values = lsa_span(doc, model)
    terms = [1 / math.sqrt(2), 1.0]
    assert values["mean"] == pytest.approx(sum(terms) / 2, abs=1e-9)


def test_span_in_unit_range_always():
    model = model_of(a=(0.3, -0.7), b=(0.9, 0.1), c=(-0.5, 0.5))
    doc = one_para_doc(word_sent("a"), word_sent("b"), word_sent("c"))
    values = lsa_span(doc, model)
    assert 0.0 <= values["mean"] <= 1.0


# --- cross entropy -------------------------------------------------------------------

def test_cross_entropy_degenerate_identical():
    doc = one_para_doc(word_sent("a"), word_sent("a"))
    assert cross_entropy(doc) == pytest.approx(0.0)


def test_cross_entropy_hand_value():
    doc = one_para_doc(word_sent("a"), word_sent("b"))
    assert cross_entropy(doc) == pytest.approx(math.log2(3), abs=1e-9)


def test_cross_entropy_single_sentence_missing():
    assert cross_entropy(one_para_doc(word_sent("a"))) is None


def test_cross_entropy_nonnegative():
    doc = one_para_doc(
        word_sent("a", "b", "a"), word_sent("b", "c"), word_sent("a", "c", "c")
    )
    assert cross_entropy(doc) >= 0.0
