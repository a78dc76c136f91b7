"""Lexical resources: word lists, connectives, norms, senses, frequency
tables and embeddings, plus the manifest-driven bundle loader.

Every resource is optional; metrics that depend on an absent resource
report MISSING instead of failing. Lookups are case-insensitive and
NFC-normalized end to end. File formats (all UTF-8):

* word set           one entry per line
* connectives        TSV  form <TAB> kind <TAB> polarity
* norms              TSV  word <TAB> aoa <TAB> concreteness <TAB> familiarity <TAB> imageability
* senses             TSV  word <TAB> pos <TAB> count
* hypernyms          TSV  verb <TAB> count
* polarity           TSV  word <TAB> POSITIVE|NEGATIVE
* frequency          TSV  word <TAB> fpm
* embeddings         header "V d", then "word v1 ... vd"
* manifest           properties file of key=path lines (paths relative
                     to the manifest unless absolute)
"""
from __future__ import annotations

import math
import unicodedata
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .model import Sentence

CONNECTIVE_KINDS = ("ADDITIVE", "CAUSAL", "LOGICAL", "TEMPORAL")
POLARITIES = ("POSITIVE", "NEGATIVE")

#: Frozen negation word list used by the connective ratios.
NEGATION_WORDS = frozenset({"não", "nem", "nunca", "jamais", "tampouco"})


class ResourceError(ValueError):
    """Raised when a resource file violates its format or invariants."""


def _norm(word: str) -> str:
    return unicodedata.normalize("NFC", word).lower()


@dataclass(frozen=True)
class WordSet:
    name: str
    entries: frozenset

    def __contains__(self, word: str) -> bool:
        return _norm(word) in self.entries

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ConnectiveEntry:
    form: str          # lowercase, possibly multiword (space-joined)
    kind: str
    polarity: str

    @property
    def words(self) -> tuple:
        return tuple(self.form.split(" "))


@dataclass(frozen=True)
class ConnectiveMatch:
    start: int         # 0-based token offset within the sentence
    length: int        # tokens covered
    form: str
    kind: str
    polarity: str


@dataclass(frozen=True)
class ConnectiveLexicon:
    entries: tuple

    def __post_init__(self):
        seen = set()
        for entry in self.entries:
            key = (entry.form, entry.kind)
            if key in seen:
                raise ResourceError(f"duplicate connective entry {key}")
            seen.add(key)

    @cached_property
    def by_first_word(self) -> dict:
        index: dict = {}
        for entry in self.entries:
            index.setdefault(entry.words[0], []).append(entry)
        for bucket in index.values():
            bucket.sort(key=lambda e: (-len(e.words), e.kind, e.polarity))
        return index

    def kinds_of(self, form: str) -> set:
        return {e.kind for e in self.entries if e.form == form}


def match_connectives(sentence: Sentence, lexicon: ConnectiveLexicon) -> list:
    """Greedy longest-match connective spans, left to right, non-overlapping.

    A form registered under several kinds yields one match per kind over
    the same span; span starts never overlap a previous span.
    """
    surfaces = [_norm(t.surface) for t in sentence.tokens]
    matches: list[ConnectiveMatch] = []
    index = lexicon.by_first_word
    i = 0
    n = len(surfaces)
    while i < n:
        candidates = index.get(surfaces[i])
        matched_len = 0
        if candidates:
            for entry in candidates:  # sorted longest first
                k = len(entry.words)
                if matched_len and k < matched_len:
                    break
                if tuple(surfaces[i : i + k]) == entry.words:
                    matches.append(
                        ConnectiveMatch(
                            start=i,
                            length=k,
                            form=entry.form,
                            kind=entry.kind,
                            polarity=entry.polarity,
                        )
                    )
                    matched_len = k
        i += matched_len if matched_len else 1
    return matches


@dataclass(frozen=True)
class NormScores:
    aoa: float
    concreteness: float
    familiarity: float
    imageability: float


@dataclass(frozen=True)
class NormTable:
    scores: dict

    def get(self, word: str) -> NormScores | None:
        return self.scores.get(_norm(word))


@dataclass(frozen=True)
class SenseTable:
    senses: dict       # (word, pos) -> count >= 1
    hypernyms: dict    # verb lemma -> count >= 0

    def sense_count(self, word: str, pos: str) -> int | None:
        return self.senses.get((_norm(word), pos))

    def hypernym_count(self, verb: str) -> int | None:
        return self.hypernyms.get(_norm(verb))


@dataclass(frozen=True)
class PolarityLexicon:
    polarity: dict     # word -> POSITIVE | NEGATIVE

    def get(self, word: str) -> str | None:
        return self.polarity.get(_norm(word))


@dataclass(frozen=True)
class FreqTable:
    corpus_name: str
    fpm: dict
    total_tokens: int = 0

    def get(self, word: str) -> float | None:
        return self.fpm.get(_norm(word))


def zipf(fpm: float) -> float:
    """Zipf scale value of a frequency per million: log10(fpm) + 3."""
    if fpm <= 0:
        raise ResourceError(f"fpm must be positive, got {fpm}")
    return math.log10(fpm) + 3.0


@dataclass(frozen=True)
class EmbeddingModel:
    dimension: int
    vectors: dict

    def get(self, word: str) -> np.ndarray | None:
        return self.vectors.get(_norm(word))


@dataclass(frozen=True)
class ResourceBundle:
    simple_words: WordSet | None = None
    concrete_words: WordSet | None = None
    easy_conjunctions: WordSet | None = None
    hard_conjunctions: WordSet | None = None
    connectives: ConnectiveLexicon | None = None
    discourse_markers: WordSet | None = None
    norms: NormTable | None = None
    senses: SenseTable | None = None
    polarity: PolarityLexicon | None = None
    abstract_nouns: WordSet | None = None
    freq_tables: tuple = ()
    legacy_freq: FreqTable | None = None
    embeddings: EmbeddingModel | None = None
    stem: object = None  # pluggable stemmer callable; default set at load

    def freq_table(self, role: str) -> FreqTable | None:
        for table in self.freq_tables:
            if table.corpus_name == role:
                return table
        return None


EMPTY_BUNDLE = ResourceBundle()


def _read_lines(path: Path) -> list:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ResourceError(f"cannot read resource file {path}: {exc}") from exc
    return [line.rstrip("\n") for line in text.split("\n")]


def load_word_set(path: Path, name: str) -> WordSet:
    entries = set()
    for line in _read_lines(path):
        word = _norm(line.strip())
        if word:
            entries.add(word)
    if not entries:
        raise ResourceError(f"word set {path} is empty")
    return WordSet(name=name, entries=frozenset(entries))


def _tsv_rows(path: Path, n_cols: int):
    for lineno, line in enumerate(_read_lines(path), start=1):
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != n_cols:
            raise ResourceError(
                f"{path} line {lineno}: expected {n_cols} columns, found {len(cols)}"
            )
        yield lineno, cols


def load_connectives(path: Path) -> ConnectiveLexicon:
    entries = []
    for lineno, (form, kind, polarity) in _tsv_rows(path, 3):
        form = " ".join(_norm(form).split())
        kind = kind.strip().upper()
        polarity = polarity.strip().upper()
        if kind not in CONNECTIVE_KINDS:
            raise ResourceError(f"{path} line {lineno}: unknown connective kind {kind!r}")
        if polarity not in POLARITIES:
            raise ResourceError(f"{path} line {lineno}: unknown polarity {polarity!r}")
        entries.append(ConnectiveEntry(form=form, kind=kind, polarity=polarity))
    return ConnectiveLexicon(entries=tuple(entries))


def load_norms(path: Path) -> NormTable:
    scores = {}
    for lineno, cols in _tsv_rows(path, 5):
        word = _norm(cols[0])
        if word in scores:
            raise ResourceError(f"{path} line {lineno}: duplicate norm entry {word!r}")
        try:
            values = [float(c) for c in cols[1:]]
        except ValueError:
            raise ResourceError(f"{path} line {lineno}: non-numeric score") from None
        for value, norm_name in zip(values, ("aoa", "concreteness", "familiarity", "imageability")):
            if not 1.0 <= value <= 7.0:
                raise ResourceError(
                    f"{path} line {lineno}: {norm_name} score {value} for {word!r} "
                    f"outside the 1-7 scale"
                )
        scores[word] = NormScores(*values)
    if not scores:
        raise ResourceError(f"norm table {path} is empty")
    return NormTable(scores=scores)


_SENSE_POS = {"NOUN", "VERB", "ADJ", "ADV"}


def load_senses(path: Path) -> dict:
    senses = {}
    for lineno, (word, pos, count) in _tsv_rows(path, 3):
        pos = pos.strip().upper()
        if pos not in _SENSE_POS:
            raise ResourceError(f"{path} line {lineno}: unsupported sense pos {pos!r}")
        key = (_norm(word), pos)
        if key in senses:
            raise ResourceError(f"{path} line {lineno}: duplicate sense entry {key}")
        try:
            n = int(count)
        except ValueError:
            raise ResourceError(f"{path} line {lineno}: non-integer sense count") from None
        if n < 1:
            raise ResourceError(f"{path} line {lineno}: sense count must be >= 1")
        senses[key] = n
    return senses


def load_hypernyms(path: Path) -> dict:
    hypernyms = {}
    for lineno, (verb, count) in _tsv_rows(path, 2):
        key = _norm(verb)
        if key in hypernyms:
            raise ResourceError(f"{path} line {lineno}: duplicate hypernym entry {key!r}")
        try:
            n = int(count)
        except ValueError:
            raise ResourceError(f"{path} line {lineno}: non-integer hypernym count") from None
        if n < 0:
            raise ResourceError(f"{path} line {lineno}: hypernym count must be >= 0")
        hypernyms[key] = n
    return hypernyms


def load_polarity(path: Path) -> PolarityLexicon:
    polarity = {}
    for lineno, (word, pol) in _tsv_rows(path, 2):
        key = _norm(word)
        pol = pol.strip().upper()
        if pol not in POLARITIES:
            raise ResourceError(f"{path} line {lineno}: unknown polarity {pol!r}")
        if key in polarity:
            raise ResourceError(f"{path} line {lineno}: duplicate polarity entry {key!r}")
        polarity[key] = pol
    return PolarityLexicon(polarity=polarity)


def load_freq_table(path: Path, corpus_name: str) -> FreqTable:
    fpm = {}
    for lineno, (word, value) in _tsv_rows(path, 2):
        key = _norm(word)
        if key in fpm:
            raise ResourceError(f"{path} line {lineno}: duplicate frequency entry {key!r}")
        try:
            f = float(value)
        except ValueError:
            raise ResourceError(f"{path} line {lineno}: non-numeric frequency") from None
        if f <= 0:
            raise ResourceError(
                f"{path} line {lineno}: frequency for {key!r} must be positive"
            )
        fpm[key] = f
    if not fpm:
        raise ResourceError(f"frequency table {path} is empty")
    return FreqTable(corpus_name=corpus_name, fpm=fpm)


def load_embeddings(path: Path) -> EmbeddingModel:
    lines = [ln for ln in _read_lines(path) if ln.strip()]
    if not lines:
        raise ResourceError(f"embedding file {path} is empty")
    header = lines[0].split()
    if len(header) != 2:
        raise ResourceError(f"{path}: embedding header must be 'V d'")
    count, dim = int(header[0]), int(header[1])
    if dim < 2:
        raise ResourceError(f"{path}: embedding dimension must be >= 2, got {dim}")
    vectors = {}
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != dim + 1:
            raise ResourceError(
                f"{path} line {lineno}: expected {dim + 1} fields, found {len(parts)}"
            )
        word = _norm(parts[0])
        if word in vectors:
            raise ResourceError(f"{path} line {lineno}: duplicate embedding {word!r}")
        vectors[word] = np.array([float(x) for x in parts[1:]], dtype=np.float64)
    if len(vectors) != count:
        raise ResourceError(
            f"{path}: header announces {count} vectors, file holds {len(vectors)}"
        )
    return EmbeddingModel(dimension=dim, vectors=vectors)


_MANIFEST_KEYS = {
    "simple_words", "concrete_words", "easy_conjunctions", "hard_conjunctions",
    "connectives", "discourse_markers", "norms", "senses", "hypernyms",
    "polarity", "abstract_nouns", "freq_a", "freq_b", "freq_legacy",
    "embeddings",
}


def load_bundle(manifest_path) -> ResourceBundle:
    """Load every resource referenced by a key=path manifest file."""
    manifest = Path(manifest_path)
    if not manifest.is_file():
        raise ResourceError(f"manifest not found: {manifest}")
    base = manifest.parent
    paths = {}
    for lineno, line in enumerate(_read_lines(manifest), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ResourceError(f"{manifest} line {lineno}: expected key=path")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _MANIFEST_KEYS:
            raise ResourceError(f"{manifest} line {lineno}: unknown resource key {key!r}")
        if key in paths:
            raise ResourceError(f"{manifest} line {lineno}: duplicate key {key!r}")
        path = Path(value.strip())
        if not path.is_absolute():
            path = base / path
        if not path.is_file():
            raise ResourceError(f"{manifest} line {lineno}: file not found: {path}")
        paths[key] = path

    from . import stemmer

    senses = load_senses(paths["senses"]) if "senses" in paths else None
    hypernyms = load_hypernyms(paths["hypernyms"]) if "hypernyms" in paths else None
    sense_table = None
    if senses is not None or hypernyms is not None:
        sense_table = SenseTable(senses=senses or {}, hypernyms=hypernyms or {})

    freq_tables = []
    if "freq_a" in paths:
        freq_tables.append(load_freq_table(paths["freq_a"], "corpus-A"))
    if "freq_b" in paths:
        freq_tables.append(load_freq_table(paths["freq_b"], "corpus-B"))

    return ResourceBundle(
        simple_words=load_word_set(paths["simple_words"], "simple_words")
        if "simple_words" in paths else None,
        concrete_words=load_word_set(paths["concrete_words"], "concrete_words")
        if "concrete_words" in paths else None,
        easy_conjunctions=load_word_set(paths["easy_conjunctions"], "easy_conjunctions")
        if "easy_conjunctions" in paths else None,
        hard_conjunctions=load_word_set(paths["hard_conjunctions"], "hard_conjunctions")
        if "hard_conjunctions" in paths else None,
        connectives=load_connectives(paths["connectives"])
        if "connectives" in paths else None,
        discourse_markers=load_word_set(paths["discourse_markers"], "discourse_markers")
        if "discourse_markers" in paths else None,
        norms=load_norms(paths["norms"]) if "norms" in paths else None,
        senses=sense_table,
        polarity=load_polarity(paths["polarity"]) if "polarity" in paths else None,
        abstract_nouns=load_word_set(paths["abstract_nouns"], "abstract_nouns")
        if "abstract_nouns" in paths else None,
        freq_tables=tuple(freq_tables),
        legacy_freq=load_freq_table(paths["freq_legacy"], "legacy")
        if "freq_legacy" in paths else None,
        embeddings=load_embeddings(paths["embeddings"])
        if "embeddings" in paths else None,
        stem=stemmer.stem,
    )
