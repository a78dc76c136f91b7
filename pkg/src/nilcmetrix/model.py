"""Annotated-text data model: tokens, sentences, paragraphs, documents.

Documents are immutable after construction and safe to share across
workers. Annotation follows the UD conventions (coarse PoS tags, feature
maps, sentence-local head indices with 0 = root).
"""
from __future__ import annotations

from dataclasses import dataclass, field

UPOS_TAGS = frozenset({
    "NOUN", "PROPN", "VERB", "AUX", "ADJ", "ADV", "PRON", "DET", "ADP",
    "CCONJ", "SCONJ", "NUM", "PART", "INTJ", "PUNCT", "SYM", "X",
})

CONTENT_TAGS = frozenset({"NOUN", "PROPN", "VERB", "ADJ", "ADV"})

#: Tags never counted as words (see word_tokens).
NON_WORD_TAGS = frozenset({"PUNCT", "SYM"})

#: Constituency labels treated as sentence-type nodes by default.
DEFAULT_SENTENCE_LABELS = frozenset({"S", "IP", "CP"})


class ValidationError(ValueError):
    """Raised when constructed annotation violates a model invariant."""


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str = ""
    pos: str = "X"
    morph: dict = field(default_factory=dict)
    head: int = 0
    deprel: str = ""
    index: int = 1

    @property
    def is_content(self) -> bool:
        return self.pos in CONTENT_TAGS

    @property
    def is_word(self) -> bool:
        return self.pos not in NON_WORD_TAGS

    @property
    def deprel_base(self) -> str:
        return self.deprel.split(":", 1)[0] if self.deprel else ""

    @property
    def surface_lower(self) -> str:
        return self.surface.lower()

    @property
    def lemma_lower(self) -> str:
        return (self.lemma or self.surface).lower()

    def feat(self, name: str) -> str | None:
        return self.morph.get(name)

    @property
    def is_finite_verb(self) -> bool:
        return self.pos in ("VERB", "AUX") and self.morph.get("VerbForm") == "Fin"

    @property
    def is_personal_pronoun(self) -> bool:
        # PronType=Prs marks personal pronouns in UD; a bare Person feature
        # on a PRON is accepted as an equivalent signal.
        if self.pos != "PRON":
            return False
        prontype = self.morph.get("PronType")
        if prontype is not None:
            return prontype == "Prs"
        return "Person" in self.morph


@dataclass(frozen=True)
class ConstituencyNode:
    label: str
    children: tuple = ()
    leaf_token: int | None = None

    def __post_init__(self):
        if (len(self.children) == 0) != (self.leaf_token is not None):
            raise ValidationError(
                "constituency node must be a leaf (token, no children) or "
                "internal (children, no token): label=%r" % self.label
            )

    @property
    def is_leaf(self) -> bool:
        return self.leaf_token is not None

    def leaves(self) -> list["ConstituencyNode"]:
        if self.is_leaf:
            return [self]
        out: list[ConstituencyNode] = []
        for child in self.children:
            out.extend(child.leaves())
        return out

    def validate(self) -> None:
        indices = [leaf.leaf_token for leaf in self.leaves()]
        if any(i is None or i < 1 for i in indices):
            raise ValidationError("constituency leaves must carry 1-based token indices")
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise ValidationError("constituency leaf indices must increase left to right")


@dataclass(frozen=True)
class Sentence:
    tokens: tuple
    tree: ConstituencyNode | None = None

    def __post_init__(self):
        if not self.tokens:
            raise ValidationError("sentence must contain at least one token")
        n = len(self.tokens)
        roots = 0
        for pos_i, tok in enumerate(self.tokens, start=1):
            if tok.index != pos_i:
                raise ValidationError(
                    f"token index {tok.index} does not match position {pos_i}"
                )
            if not (0 <= tok.head <= n):
                raise ValidationError(
                    f"head {tok.head} out of range for sentence of {n} tokens"
                )
            if tok.head == tok.index:
                raise ValidationError(f"token {tok.index} is its own head")
            if tok.head == 0:
                roots += 1
        if roots != 1:
            raise ValidationError(f"sentence must have exactly one root, found {roots}")
        if self.tree is not None:
            self.tree.validate()
            covered = {leaf.leaf_token for leaf in self.tree.leaves()}
            all_idx = {t.index for t in self.tokens}
            non_punct = {t.index for t in self.tokens if t.pos not in NON_WORD_TAGS}
            if covered != all_idx and covered != non_punct:
                raise ValidationError(
                    "constituency leaves must cover all tokens or all non-punctuation tokens"
                )

    @property
    def tree_covers_punctuation(self) -> bool | None:
        """Coverage mode of the constituency tree: True when its leaves
        span every token, False when only the non-punctuation tokens,
        None without a tree."""
        if self.tree is None:
            return None
        covered = {leaf.leaf_token for leaf in self.tree.leaves()}
        return covered == {t.index for t in self.tokens}

    @property
    def words(self) -> list[Token]:
        return [t for t in self.tokens if t.is_word]

    @property
    def content_words(self) -> list[Token]:
        return [t for t in self.tokens if t.is_content]

    @property
    def root(self) -> Token:
        return next(t for t in self.tokens if t.head == 0)

    def children_of(self, index: int) -> list[Token]:
        return [t for t in self.tokens if t.head == index]

    def subtree_indices(self, index: int) -> set[int]:
        """Indices of the token plus all its transitive dependents."""
        out = {index}
        frontier = [index]
        while frontier:
            head = frontier.pop()
            for tok in self.tokens:
                if tok.head == head and tok.index not in out:
                    out.add(tok.index)
                    frontier.append(tok.index)
        return out


@dataclass(frozen=True)
class Paragraph:
    sentences: tuple
    is_heading: bool = False

    def __post_init__(self):
        if not self.sentences:
            raise ValidationError("paragraph must contain at least one sentence")


@dataclass(frozen=True)
class Document:
    id: str
    paragraphs: tuple
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.id:
            raise ValidationError("document id must be non-empty")
        if not self.paragraphs:
            raise ValidationError("document must contain at least one paragraph")
        if all(p.is_heading for p in self.paragraphs):
            raise ValidationError("document must contain at least one non-heading paragraph")

    @property
    def sentences(self) -> list[Sentence]:
        return [s for p in self.paragraphs for s in p.sentences]

    @property
    def tokens(self) -> list[Token]:
        return [t for s in self.sentences for t in s.tokens]

    @property
    def words(self) -> list[Token]:
        return [t for t in self.tokens if t.is_word]

    def has_pos(self) -> bool:
        """True when the document carries usable PoS annotation."""
        toks = self.tokens
        return bool(toks) and any(t.pos != "X" for t in toks)

    def has_deps(self) -> bool:
        """True when every token carries a dependency relation label."""
        toks = self.tokens
        return bool(toks) and all(t.deprel for t in toks)

    def has_trees(self) -> bool:
        return any(s.tree is not None for s in self.sentences)
