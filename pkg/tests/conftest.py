from pathlib import Path

import pytest

from nilcmetrix.model import Document, Paragraph, Sentence, Token
from nilcmetrix.resources import load_bundle

FIXTURES = Path(__file__).parent / "fixtures"


def tok(surface, pos="NOUN", lemma=None, head=0, deprel="dep", index=1, **morph):
    return Token(
        surface=surface,
        lemma=lemma if lemma is not None else surface.lower(),
        pos=pos,
        morph=morph,
        head=head,
        deprel=deprel,
        index=index,
    )


def sent(*specs, tree=None):
    """Build a sentence from (surface, pos[, morph dict]) tuples.

    The first token is the root; every other token attaches to it, which
    is enough for metrics that do not inspect the tree shape.
    """
    tokens = []
    for i, spec in enumerate(specs):
        surface, pos = spec[0], spec[1]
        morph = spec[2] if len(spec) > 2 else {}
        tokens.append(
            Token(
                surface=surface,
                lemma=surface.lower(),
                pos=pos,
                morph=morph,
                head=0 if i == 0 else 1,
                deprel="root" if i == 0 else "dep",
                index=i + 1,
            )
        )
    return Sentence(tokens=tuple(tokens), tree=tree)


def doc_of(*sentences, doc_id="t", headings=()):
    paragraphs = [
        Paragraph(sentences=(s,), is_heading=(i in headings))
        for i, s in enumerate(sentences)
    ]
    return Document(id=doc_id, paragraphs=tuple(paragraphs))


def one_para_doc(*sentences, doc_id="t"):
    return Document(id=doc_id, paragraphs=(Paragraph(sentences=tuple(sentences)),))


def word_sent(*surfaces, pos="NOUN", tree=None):
    return sent(*((s, pos) for s in surfaces), tree=tree)


@pytest.fixture(scope="session")
def toy_bundle():
    return load_bundle(FIXTURES / "resources" / "toy.manifest")


@pytest.fixture(scope="session")
def fixture_docs():
    from nilcmetrix.ingest import parse_conllu

    docs = []
    for path in sorted((FIXTURES / "corpus").glob("*.conllu")):
        docs.append(parse_conllu(path.read_bytes(), doc_id=path.stem))
    return docs
