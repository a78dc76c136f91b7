"""Syntactic complexity over dependency and constituency structures.

Constituency-based scores (Yngve, Frazier) are undefined without trees;
dependency-based scores assume UD-style relation labels. Clauses are
approximated by finite verbs (floored at one per sentence wherever a
clause denominator is needed).
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import (
    ConstituencyNode,
    DEFAULT_SENTENCE_LABELS,
    Document,
    Sentence,
)
from .resources import EMPTY_BUNDLE
from .state import DocState, mean, ratio


def yngve(tree: ConstituencyNode) -> float:
    """Mean Yngve load: per leaf, the right-sibling count summed over the
    nodes on its root path (the classic stack-depth formulation)."""
    loads: list[int] = []

    def walk(node: ConstituencyNode, depth: int) -> None:
        if node.is_leaf:
            loads.append(depth)
            return
        last = len(node.children) - 1
        for i, child in enumerate(node.children):
            walk(child, depth + (last - i))

    walk(tree, 0)
    return sum(loads) / len(loads)


def frazier(tree: ConstituencyNode, sentence_labels=DEFAULT_SENTENCE_LABELS) -> float:
    """Mean Frazier score: per leaf, walk upward while the current node is
    the leftmost child of its parent; every node on that chain scores 1,
    or 1.5 when its parent carries a sentence-type label. The root joins
    the chain (scoring 1) when the walk reaches it."""
    parent: dict = {}

    def index_parents(node: ConstituencyNode) -> None:
        for child in node.children:
            parent[id(child)] = node
            index_parents(child)

    index_parents(tree)
    scores: list[float] = []
    for leaf in tree.leaves():
        score = 0.0
        current = leaf
        while True:
            up = parent.get(id(current))
            if up is None:
                score += 1.0  # reached the root via a leftmost chain
                break
            if up.children[0] is not current:
                break
            score += 1.5 if up.label in sentence_labels else 1.0
            current = up
        scores.append(score)
    return sum(scores) / len(scores)


def dependency_distance(sentence: Sentence) -> float | None:
    """Mean |dependent - head| over non-root, non-punctuation tokens."""
    distances = [
        abs(t.index - t.head)
        for t in sentence.tokens
        if t.head != 0 and t.is_word
    ]
    return mean(distances)


def _main_verb_index(sentence: Sentence) -> int | None:
    root = sentence.root
    if root.pos in ("VERB", "AUX"):
        return root.index
    for child in sorted(sentence.children_of(root.index), key=lambda t: t.index):
        if child.is_finite_verb:
            return child.index
    return None


def words_before_main_verb(sentence: Sentence) -> int | None:
    verb = _main_verb_index(sentence)
    if verb is None:
        return None
    return sum(1 for t in sentence.tokens if t.index < verb and t.is_word)


def adverbs_before_main_verb(sentence: Sentence) -> int | None:
    verb = _main_verb_index(sentence)
    if verb is None:
        return None
    return sum(1 for t in sentence.tokens if t.index < verb and t.pos == "ADV")


_SUBORDINATE_RELS = frozenset({"ccomp", "xcomp", "advcl", "acl", "csubj"})
_CLAUSE_HEAD_RELS = frozenset(
    {"root", "csubj", "ccomp", "xcomp", "advcl", "acl", "conj", "parataxis"}
)


@dataclass(frozen=True)
class ClauseAnalysis:
    clause_count: int
    subordinate: int
    relative: int
    adverbial: int
    coordinate_starts: int
    passive: int
    non_svo: int
    postponed_subject: int
    infinitive_clauses: int
    gerund_clauses: int
    participle_clauses: int


def clause_analysis(sentence: Sentence) -> ClauseAnalysis:
    tokens = sentence.tokens
    finite = sum(1 for t in tokens if t.is_finite_verb)
    clause_count = max(finite, 1)

    subordinate = sum(1 for t in tokens if t.deprel_base in _SUBORDINATE_RELS)
    adverbial = sum(1 for t in tokens if t.deprel_base == "advcl")

    relative = 0
    for t in tokens:
        if t.deprel == "acl:relcl":
            relative += 1
        elif t.deprel_base == "acl":
            children = sentence.children_of(t.index)
            if any(c.pos == "PRON" and c.feat("PronType") == "Rel" for c in children):
                relative += 1

    passive_heads = {
        t.head for t in tokens if t.deprel in ("aux:pass", "nsubj:pass") and t.head
    }
    passive = len(passive_heads)

    non_svo = 0
    postponed = 0
    verb_indices = [t.index for t in tokens if t.pos in ("VERB", "AUX")]
    for v in verb_indices:
        children = sentence.children_of(v)
        obj_before = any(
            c.deprel_base in ("obj", "iobj") and c.index < v for c in children
        )
        subj_after = any(c.deprel_base == "nsubj" and c.index > v for c in children)
        if obj_before or subj_after:
            non_svo += 1
        if subj_after:
            postponed += 1

    coordinate_starts = 0
    infinitive = gerund = participle = 0
    for t in tokens:
        if not (t.pos == "VERB" and t.feat("VerbForm") in ("Fin", "Inf", "Ger", "Part")):
            continue
        if t.feat("VerbForm") == "Fin" or t.deprel_base in _CLAUSE_HEAD_RELS:
            span = sentence.subtree_indices(t.index)
            first = min(span)
            if tokens[first - 1].pos == "CCONJ":
                coordinate_starts += 1
        if t.feat("VerbForm") == "Fin":
            continue
        if t.deprel_base not in _CLAUSE_HEAD_RELS:
            continue
        # A participle/gerund with a finite auxiliary heads a periphrastic
        # (finite) clause, not a non-finite clause of its own.
        aux_children = [
            c
            for c in sentence.children_of(t.index)
            if c.pos == "AUX" and c.feat("VerbForm") == "Fin"
        ]
        if aux_children:
            continue
        form = t.feat("VerbForm")
        if form == "Inf":
            infinitive += 1
        elif form == "Ger":
            gerund += 1
        elif form == "Part":
            participle += 1

    return ClauseAnalysis(
        clause_count=clause_count,
        subordinate=subordinate,
        relative=relative,
        adverbial=adverbial,
        coordinate_starts=coordinate_starts,
        passive=passive,
        non_svo=non_svo,
        postponed_subject=postponed,
        infinitive_clauses=infinitive,
        gerund_clauses=gerund,
        participle_clauses=participle,
    )


_NOMINAL_TAGS = ("NOUN", "PROPN", "PRON")
_NP_DEP_RELS = frozenset({"det", "amod", "nmod", "nummod", "case", "flat", "compound"})
_NP_EMBEDDED_RELS = frozenset({"nmod", "flat", "compound"})


def noun_phrase_spans(sentence: Sentence) -> list:
    """Word-token index lists of the noun phrases in a sentence.

    An NP is a nominal head (not itself embedded in a larger nominal via
    nmod/flat/compound) plus the contiguous block of its transitive
    det/amod/nmod/nummod/case/flat/compound dependents around it.
    """
    spans = []
    for head in sentence.tokens:
        if head.pos not in _NOMINAL_TAGS:
            continue
        if head.deprel_base in _NP_EMBEDDED_RELS:
            continue
        members = {head.index}
        frontier = [head.index]
        while frontier:
            idx = frontier.pop()
            for child in sentence.children_of(idx):
                if child.deprel_base in _NP_DEP_RELS and child.index not in members:
                    members.add(child.index)
                    frontier.append(child.index)
        # Trim to the contiguous run containing the head.
        lo = head.index
        while lo - 1 in members:
            lo -= 1
        hi = head.index
        while hi + 1 in members:
            hi += 1
        span = [
            i for i in range(lo, hi + 1) if sentence.tokens[i - 1].is_word
        ]
        if span:
            spans.append(span)
    return spans


def pattern_density(doc: Document) -> dict:
    state = DocState(doc, EMPTY_BUNDLE)
    return pattern_density_group(state)


def syntax_group(state: DocState) -> dict:
    sentences = state.sentences
    n_sentences = len(sentences)

    tree_yngve = [yngve(s.tree) for s in sentences if s.tree is not None]
    tree_frazier = [frazier(s.tree) for s in sentences if s.tree is not None]

    distances = []
    for s in sentences:
        for t in s.tokens:
            if t.head != 0 and t.is_word:
                distances.append(abs(t.index - t.head))

    wbv = [w for w in (words_before_main_verb(s) for s in sentences) if w is not None]
    abv = [a for a in (adverbs_before_main_verb(s) for s in sentences) if a is not None]

    analyses = [clause_analysis(s) for s in sentences]
    total_clauses = sum(a.clause_count for a in analyses)
    one_clause = sum(
        1
        for s, a in zip(sentences, analyses)
        if a.clause_count == 1 and any(t.is_finite_verb for t in s.tokens)
    )
    cconj = sum(1 for t in state.doc.tokens if t.pos == "CCONJ")

    def clause_ratio(total: int) -> float | None:
        return ratio(total, total_clauses)

    return {
        "yngve": mean(tree_yngve),
        "frazier": mean(tree_frazier),
        "dep_distance": mean(distances),
        "words_before_main_verb": mean(wbv),
        "adverbs_before_main_verb": mean(abv),
        "clauses_per_sentence": ratio(state.finite_verb_total, n_sentences),
        "sentences_with_one_clause": ratio(one_clause, n_sentences),
        "coordinate_conjunctions_per_clause": clause_ratio(cconj),
        "subordinate_clauses_ratio": clause_ratio(sum(a.subordinate for a in analyses)),
        "relative_clauses_ratio": clause_ratio(sum(a.relative for a in analyses)),
        "adverbial_clauses_ratio": clause_ratio(sum(a.adverbial for a in analyses)),
        "passive_ratio": clause_ratio(sum(a.passive for a in analyses)),
        "non_svo_ratio": clause_ratio(sum(a.non_svo for a in analyses)),
        "postponed_subject_ratio": clause_ratio(sum(a.postponed_subject for a in analyses)),
        "infinitive_clauses_ratio": clause_ratio(
            sum(a.infinitive_clauses for a in analyses)
        ),
    }


def pattern_density_group(state: DocState) -> dict:
    analyses = [clause_analysis(s) for s in state.sentences]
    total_clauses = sum(a.clause_count for a in analyses)
    gerunds = sum(a.gerund_clauses for a in analyses)
    sizes = []
    for s in state.sentences:
        sizes.extend(len(span) for span in noun_phrase_spans(s))
    return {
        "gerund_clauses_ratio": ratio(gerunds, total_clauses),
        "words_per_np": mean(sizes),
        "words_per_np_max": float(max(sizes)) if sizes else None,
        "words_per_np_min": float(min(sizes)) if sizes else None,
    }
