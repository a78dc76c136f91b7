"""Referential cohesion (overlap metrics) and semantic cohesion over a
word-embedding space (similarity, givenness, span, cross-entropy).

Sentence vectors are unweighted means of in-vocabulary word vectors;
all similarity scores are cosines, so they are invariant under uniform
positive scaling of the embedding space.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import Document, Sentence
from .resources import EMPTY_BUNDLE, EmbeddingModel, ResourceBundle
from .state import DocState, mean, pstdev, ratio

#: Directions whose residual norm falls below this fraction of the vector
#: norm are treated as already spanned during orthogonalization.
SPAN_TOLERANCE = 1e-10


# ---------------------------------------------------------------------------
# Referential cohesion
# ---------------------------------------------------------------------------

def _argument_lemmas(sentence: Sentence) -> set:
    return {
        t.lemma_lower for t in sentence.tokens if t.pos in ("NOUN", "PROPN", "PRON")
    }


def _content_lemmas(sentence: Sentence) -> set:
    return {t.lemma_lower for t in sentence.tokens if t.is_content}


def _content_stems(sentence: Sentence, stem) -> set:
    return {stem(t.surface_lower) for t in sentence.tokens if t.is_content}


def _binary_overlap(sets: list, pairs) -> float | None:
    values = [1.0 if sets[i] & sets[j] else 0.0 for i, j in pairs]
    return mean(values)


def _proportional_overlap(sets: list, pairs) -> float | None:
    values = []
    for i, j in pairs:
        a, b = sets[i], sets[j]
        if not a and not b:
            continue
        values.append(2.0 * len(a & b) / (len(a) + len(b)))
    return mean(values)


def _anaphor_candidates(sentence: Sentence) -> list:
    return [
        t
        for t in sentence.tokens
        if t.pos == "PRON" and t.is_personal_pronoun and t.feat("Person") == "3"
    ]


def _agrees(pronoun, noun) -> bool:
    for feature in ("Gender", "Number"):
        p, n = pronoun.feat(feature), noun.feat(feature)
        if p is not None and n is not None and p != n:
            return False
    return True


def _has_anaphoric_link(later: Sentence, earlier_sentences) -> bool:
    pronouns = _anaphor_candidates(later)
    if not pronouns:
        return False
    for pron in pronouns:
        for earlier in earlier_sentences:
            for tok in earlier.tokens:
                if tok.pos in ("NOUN", "PROPN") and _agrees(pron, tok):
                    return True
    return False


def referential_group(state: DocState) -> dict:
    sentences = state.sentences
    n = len(sentences)
    stem = state.bundle.stem
    if stem is None:
        from .stemmer import stem as default_stem

        stem = default_stem

    adjacent = [(i, i + 1) for i in range(n - 1)]
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    args = [_argument_lemmas(s) for s in sentences]
    contents = [_content_lemmas(s) for s in sentences]
    stems = [_content_stems(s, stem) for s in sentences]

    adj_anaphor = [
        1.0 if _has_anaphoric_link(sentences[i + 1], [sentences[i]]) else 0.0
        for i in range(n - 1)
    ]
    global_anaphor = [
        1.0 if _has_anaphoric_link(sentences[i], sentences[:i]) else 0.0
        for i in range(1, n)
    ]

    coref_counts = []
    for i, sentence in enumerate(sentences):
        window = sentences[max(0, i - 1) : i + 1]
        count = 0
        for pron in _anaphor_candidates(sentence):
            if any(
                tok.pos in ("NOUN", "PROPN") and _agrees(pron, tok)
                for s in window
                for tok in s.tokens
            ):
                count += 1
        coref_counts.append(float(count))

    return {
        "adj_arg_ovl": _binary_overlap(args, adjacent),
        "arg_ovl": _binary_overlap(args, all_pairs),
        "adj_stem_ovl": _binary_overlap(stems, adjacent),
        "stem_ovl": _binary_overlap(stems, all_pairs),
        "adj_cw_ovl": _proportional_overlap(contents, adjacent),
        "cw_ovl": _proportional_overlap(contents, all_pairs),
        "adj_anaphoric_ref": mean(adj_anaphor),
        "anaphoric_ref": mean(global_anaphor),
        "coreferent_pronouns_per_sentence": mean(coref_counts),
    }


def referential_overlaps(doc: Document, bundle: ResourceBundle) -> dict:
    return referential_group(DocState(doc, bundle))


# ---------------------------------------------------------------------------
# Embedding-based semantic cohesion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SentenceVector:
    values: np.ndarray
    coverage: float


def sentence_vector(sentence: Sentence, model: EmbeddingModel) -> SentenceVector:
    """Unweighted mean of in-vocabulary word vectors; zero when fully OOV."""
    words = [t for t in sentence.tokens if t.is_word]
    hits = []
    for t in words:
        vec = model.get(t.surface_lower)
        if vec is None:
            vec = model.get(t.lemma_lower)
        if vec is not None:
            hits.append(vec)
    if not hits:
        return SentenceVector(
            values=np.zeros(model.dimension, dtype=np.float64),
            coverage=0.0,
        )
    stacked = np.vstack(hits).mean(axis=0)
    return SentenceVector(values=stacked, coverage=len(hits) / max(len(words), 1))


def _cosine(a: np.ndarray, b: np.ndarray) -> float | None:
    na, nb = float(np.linalg.norm(a)), float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        return None
    return float(np.dot(a, b) / (na * nb))


def _pair_stats(vectors, pairs) -> tuple:
    values = []
    for i, j in pairs:
        c = _cosine(vectors[i], vectors[j])
        if c is not None:
            values.append(c)
    return mean(values), pstdev(values)


def lsa_group(state: DocState) -> dict:
    model = state.bundle.embeddings
    out = {
        "lsa_adj_mean": None,
        "lsa_adj_sd": None,
        "lsa_paragraph_mean": None,
        "lsa_paragraph_sd": None,
        "lsa_all_mean": None,
        "lsa_all_sd": None,
        "lsa_givenness_mean": None,
        "lsa_givenness_sd": None,
        "lsa_span_mean": None,
        "lsa_span_sd": None,
    }
    if model is None:
        return out

    vectors = [sentence_vector(s, model).values for s in state.sentences]
    n = len(vectors)
    if n >= 2:
        out["lsa_adj_mean"], out["lsa_adj_sd"] = _pair_stats(
            vectors, [(i, i + 1) for i in range(n - 1)]
        )
        out["lsa_all_mean"], out["lsa_all_sd"] = _pair_stats(
            vectors, [(i, j) for i in range(n) for j in range(i + 1, n)]
        )
        given = []
        for i in range(1, n):
            history = np.vstack(vectors[:i]).mean(axis=0)
            c = _cosine(vectors[i], history)
            if c is not None:
                given.append(c)
        out["lsa_givenness_mean"] = mean(given)
        out["lsa_givenness_sd"] = pstdev(given)

        spans = []
        for i in range(1, n):
            s = _span_score(vectors[i], vectors[:i])
            if s is not None:
                spans.append(s)
        out["lsa_span_mean"] = mean(spans)
        out["lsa_span_sd"] = pstdev(spans)

    paragraph_vectors = []
    for paragraph in state.doc.paragraphs:
        vs = [sentence_vector(s, model).values for s in paragraph.sentences]
        paragraph_vectors.append(np.vstack(vs).mean(axis=0))
    if len(paragraph_vectors) >= 2:
        out["lsa_paragraph_mean"], out["lsa_paragraph_sd"] = _pair_stats(
            paragraph_vectors,
            [(i, i + 1) for i in range(len(paragraph_vectors) - 1)],
        )
    return out


def _span_score(vector: np.ndarray, history) -> float | None:
    """Fraction of the vector norm lying inside the span of the history
    vectors (sequential orthonormalization, near-zero directions dropped)."""
    norm = float(np.linalg.norm(vector))
    if norm == 0.0:
        return None
    basis: list[np.ndarray] = []
    for h in history:
        h_norm = float(np.linalg.norm(h))
        if h_norm == 0.0:
            continue
        residual = h.astype(np.float64, copy=True)
        for b in basis:
            residual = residual - np.dot(residual, b) * b
        res_norm = float(np.linalg.norm(residual))
        if res_norm > SPAN_TOLERANCE * h_norm:
            basis.append(residual / res_norm)
    if not basis:
        return 0.0
    projection = np.zeros_like(vector, dtype=np.float64)
    for b in basis:
        projection = projection + np.dot(vector, b) * b
    score = float(np.linalg.norm(projection)) / norm
    return min(score, 1.0)


def lsa_similarities(doc: Document, model: EmbeddingModel) -> dict:
    g = lsa_group(DocState(doc, ResourceBundle(embeddings=model)))
    return {
        "adj_mean": g["lsa_adj_mean"],
        "adj_sd": g["lsa_adj_sd"],
        "para_mean": g["lsa_paragraph_mean"],
        "para_sd": g["lsa_paragraph_sd"],
        "all_mean": g["lsa_all_mean"],
        "all_sd": g["lsa_all_sd"],
    }


def lsa_givenness(doc: Document, model: EmbeddingModel) -> dict:
    g = lsa_group(DocState(doc, ResourceBundle(embeddings=model)))
    return {"mean": g["lsa_givenness_mean"], "sd": g["lsa_givenness_sd"]}


def lsa_span(doc: Document, model: EmbeddingModel) -> dict:
    g = lsa_group(DocState(doc, ResourceBundle(embeddings=model)))
    return {"mean": g["lsa_span_mean"], "sd": g["lsa_span_sd"]}


# ---------------------------------------------------------------------------
# Cross-entropy of adjacent sentence pairs
# ---------------------------------------------------------------------------

def cross_entropy_group(state: DocState) -> dict:
    sentence_words = [
        [t.surface_lower for t in s.tokens if t.is_word] for s in state.sentences
    ]
    values = []
    for p, q in zip(sentence_words, sentence_words[1:]):
        if not p or not q:
            continue
        vocab = set(p) | set(q)
        denom = len(p) + len(vocab)  # add-one smoothing over the union vocab
        total = 0.0
        for w in q:
            prob = (p.count(w) + 1) / denom
            total -= math.log2(prob)
        values.append(total / len(q))
    return {"cross_entropy": mean(values)}


def cross_entropy(doc: Document) -> float | None:
    return cross_entropy_group(DocState(doc, EMPTY_BUNDLE))["cross_entropy"]
