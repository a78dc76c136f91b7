"""Document ingestion: a CoNLL-U subset and a degraded plaintext mode.

CoNLL-U conventions honored here:

* blank lines separate sentences; rows carry 10 tab-separated columns;
* ``# newpar`` starts a new paragraph (without it the document is a
  single paragraph); ``# heading = yes`` marks the enclosing paragraph
  as a heading/subtitle;
* multiword-token ranges (``1-2``) and empty nodes (``1.1``) are skipped;
* ``_`` maps to an absent value;
* an optional ``# tree = (S (NP 1 2) (VP 3))`` comment attaches a
  constituency tree whose leaves are 1-based token indices.

Plaintext mode splits paragraphs on blank lines, sentences on final
punctuation, and tokens on whitespace/punctuation; every token is tagged
X, so PoS-dependent metrics stay undefined for such documents.
"""
from __future__ import annotations

import io
import re

from .model import (
    ConstituencyNode,
    Document,
    Paragraph,
    Sentence,
    Token,
    UPOS_TAGS,
    ValidationError,
)


class ParseError(ValueError):
    """Malformed input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


_INT_ID = re.compile(r"^\d+$")
_RANGE_ID = re.compile(r"^\d+-\d+$")
_EMPTY_ID = re.compile(r"^\d+\.\d+$")


def _decode(data) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8")
    if isinstance(data, str):
        return data
    raw = data.read()
    if isinstance(raw, bytes):
        return raw.decode("utf-8")
    return raw


def _parse_morph(feats: str) -> dict:
    if feats in ("_", ""):
        return {}
    morph = {}
    for item in feats.split("|"):
        if "=" in item:
            key, value = item.split("=", 1)
            morph[key] = value
    return morph


def parse_conllu(data, doc_id: str = "doc") -> Document:
    """Parse CoNLL-U text (str, bytes or file object) into a Document."""
    text = _decode(data).replace("\r\n", "\n").replace("\r", "\n")
    if not text.strip():
        raise ParseError("empty input")

    paragraphs: list[Paragraph] = []
    sentences: list[Sentence] = []
    heading = False
    pending_heading = False
    pending_tree: str | None = None
    rows: list[tuple[int, list[str]]] = []

    def flush_sentence() -> None:
        nonlocal rows, pending_tree
        if not rows:
            pending_tree = None
            return
        tokens = []
        for lineno, cols in rows:
            morph = _parse_morph(cols[5])
            head_col = cols[6]
            if head_col == "_":
                raise ParseError("missing head", lineno)
            try:
                head = int(head_col)
            except ValueError:
                raise ParseError(f"non-integer head {head_col!r}", lineno) from None
            pos = cols[3].upper()
            if pos not in UPOS_TAGS:
                pos = "X"
            tokens.append(
                Token(
                    surface=cols[1],
                    lemma="" if cols[2] == "_" else cols[2],
                    pos=pos,
                    morph=morph,
                    head=head,
                    deprel="" if cols[7] == "_" else cols[7],
                    index=len(tokens) + 1,
                )
            )
        tree = parse_tree_comment(pending_tree) if pending_tree else None
        try:
            sentences.append(Sentence(tokens=tuple(tokens), tree=tree))
        except ValidationError as exc:
            raise ParseError(str(exc), rows[0][0]) from exc
        rows = []
        pending_tree = None

    def flush_paragraph() -> None:
        nonlocal sentences, heading
        if sentences:
            paragraphs.append(Paragraph(sentences=tuple(sentences), is_heading=heading))
        sentences = []
        heading = False

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            flush_sentence()
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment == "newpar" or comment.startswith("newpar "):
                flush_sentence()
                flush_paragraph()
                pending_heading = False
            elif comment.replace(" ", "") == "heading=yes":
                pending_heading = True
            elif comment.startswith("tree"):
                _, _, expr = comment.partition("=")
                pending_tree = expr.strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ParseError(f"expected 10 columns, found {len(cols)}", lineno)
        if _RANGE_ID.match(cols[0]) or _EMPTY_ID.match(cols[0]):
            continue
        if not _INT_ID.match(cols[0]):
            raise ParseError(f"invalid token id {cols[0]!r}", lineno)
        if pending_heading:
            heading = True
            pending_heading = False
        rows.append((lineno, cols))

    flush_sentence()
    flush_paragraph()
    if not paragraphs:
        raise ParseError("input contains no token rows")
    return Document(id=doc_id, paragraphs=tuple(paragraphs))


def parse_tree_comment(expr: str) -> ConstituencyNode:
    """Parse a bracketed constituency expression with token-index leaves."""
    tokens = re.findall(r"\(|\)|[^\s()]+", expr)
    pos = 0

    def parse_node() -> ConstituencyNode:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unbalanced constituency expression")
        if tokens[pos] == "(":
            pos += 1
            if pos >= len(tokens) or tokens[pos] in "()":
                raise ParseError("constituency node is missing a label")
            label = tokens[pos]
            pos += 1
            children: list[ConstituencyNode] = []
            while pos < len(tokens) and tokens[pos] != ")":
                children.append(parse_node())
            if pos >= len(tokens):
                raise ParseError("unbalanced constituency expression")
            pos += 1  # consume ')'
            if not children:
                raise ParseError(f"constituency node {label!r} has no children")
            return ConstituencyNode(label=label, children=tuple(children))
        leaf = tokens[pos]
        pos += 1
        if not _INT_ID.match(leaf):
            raise ParseError(f"constituency leaf must be a token index, found {leaf!r}")
        return ConstituencyNode(label="w", leaf_token=int(leaf))

    node = parse_node()
    if pos != len(tokens):
        raise ParseError("trailing content after constituency expression")
    return node


def _format_tree(node: ConstituencyNode) -> str:
    if node.is_leaf:
        return str(node.leaf_token)
    inner = " ".join(_format_tree(child) for child in node.children)
    return f"({node.label} {inner})"


def to_conllu(doc: Document) -> str:
    """Serialize a Document back to the CoNLL-U subset read by parse_conllu."""
    out = io.StringIO()
    for p_idx, paragraph in enumerate(doc.paragraphs):
        if p_idx > 0 or len(doc.paragraphs) > 1:
            out.write("# newpar\n")
        if paragraph.is_heading:
            out.write("# heading = yes\n")
        for sentence in paragraph.sentences:
            if sentence.tree is not None:
                out.write(f"# tree = {_format_tree(sentence.tree)}\n")
            for tok in sentence.tokens:
                morph = (
                    "|".join(f"{k}={v}" for k, v in sorted(tok.morph.items()))
                    if tok.morph
                    else "_"
                )
                cols = [
                    str(tok.index),
                    tok.surface,
                    tok.lemma or "_",
                    tok.pos,
                    "_",
                    morph,
                    str(tok.head),
                    tok.deprel or "_",
                    "_",
                    "_",
                ]
                out.write("\t".join(cols) + "\n")
            out.write("\n")
    return out.getvalue()


_SENTENCE_SPLIT = re.compile(r"(?<=[.!?…])\s+")
_TOKEN_PATTERN = re.compile(r"\w+(?:-\w+)*|[^\w\s]", re.UNICODE)


def ingest_plaintext(data, doc_id: str = "doc") -> Document:
    """Build a degraded Document from raw text (every token tagged X)."""
    text = _decode(data).replace("\r\n", "\n").replace("\r", "\n")
    if not text.strip():
        raise ParseError("empty input")
    paragraphs = []
    for block in re.split(r"\n\s*\n", text):
        block = " ".join(block.split())
        if not block:
            continue
        sentences = []
        for piece in _SENTENCE_SPLIT.split(block):
            surfaces = _TOKEN_PATTERN.findall(piece)
            if not surfaces:
                continue
            tokens = [
                Token(
                    surface=s,
                    lemma=s.lower(),
                    pos="X",
                    head=0 if i == 0 else 1,
                    deprel="",
                    index=i + 1,
                )
                for i, s in enumerate(surfaces)
            ]
            sentences.append(Sentence(tokens=tuple(tokens)))
        if sentences:
            paragraphs.append(Paragraph(sentences=tuple(sentences)))
    if not paragraphs:
        raise ParseError("input contains no sentences")
    return Document(id=doc_id, paragraphs=tuple(paragraphs))
