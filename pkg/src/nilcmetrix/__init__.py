"""Cohesion, coherence and complexity metrics for Brazilian Portuguese.

The engine consumes pre-annotated text (a CoNLL-U subset, or degraded
plaintext) plus optional lexical resources, computes a catalog of
metrics grouped in 14 categories, compares corpora with Welch's t-test
and exports documents-by-metrics feature tables.
"""
from .ingest import ingest_plaintext, parse_conllu, to_conllu
from .model import (
    ConstituencyNode,
    Document,
    Paragraph,
    Sentence,
    Token,
    ValidationError,
)
from .registry import MetricVector, compute_all, list_metrics, metric_ids
from .resources import ResourceBundle, load_bundle, match_connectives, zipf
from .stats import (
    ComparisonReport,
    FeatureMatrix,
    WelchResult,
    compare_corpora,
    export_features,
    welch_t,
)
from .syllables import syllable_count

__version__ = "0.1.0"

__all__ = [
    "ComparisonReport",
    "ConstituencyNode",
    "Document",
    "FeatureMatrix",
    "MetricVector",
    "Paragraph",
    "ResourceBundle",
    "Sentence",
    "Token",
    "ValidationError",
    "WelchResult",
    "compare_corpora",
    "compute_all",
    "export_features",
    "ingest_plaintext",
    "list_metrics",
    "load_bundle",
    "match_connectives",
    "metric_ids",
    "parse_conllu",
    "syllable_count",
    "to_conllu",
    "welch_t",
    "zipf",
]
