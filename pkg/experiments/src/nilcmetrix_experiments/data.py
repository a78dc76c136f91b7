"""Feature-table loading and experiment configuration.

The input is the metric engine's TSV interface: a header starting with
``doc_id`` (optionally followed by ``label``), one row per document, and
``NA`` for missing cells. Missing values become NaN here and are imputed
by train-fold medians inside the pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

MODELS = (
    "multinomial-logistic",
    "linear-svm",
    "rbf-svm",
    "random-forest",
    "mlp",
    "naive-bayes",
)

#: Classic readability columns, for category-subset replications.
READABILITY_FEATURES = (
    "flesch", "dalechall_adapted", "gunning_fog", "brunet", "honore",
)


class DataError(ValueError):
    pass


@dataclass(frozen=True)
class FeatureSet:
    doc_ids: tuple
    feature_names: tuple
    X: np.ndarray          # float64, NaN where the table said NA
    labels: tuple | None

    def subset(self, names) -> "FeatureSet":
        names = tuple(names)
        missing = [n for n in names if n not in self.feature_names]
        if missing:
            raise DataError(f"unknown feature columns: {missing}")
        idx = [self.feature_names.index(n) for n in names]
        return FeatureSet(
            doc_ids=self.doc_ids,
            feature_names=names,
            X=self.X[:, idx],
            labels=self.labels,
        )


def read_features(path, label_column: str = "label") -> FeatureSet:
    """Read a doc_id[/label]/metrics TSV into a FeatureSet."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise DataError(f"empty feature table: {path}")
    header = lines[0].split("\t")
    if header[0] != "doc_id":
        raise DataError(f"{path}: header must start with doc_id")
    try:
        label_idx = header.index(label_column)
    except ValueError:
        label_idx = None
    feature_idx = [
        i for i in range(1, len(header)) if i != label_idx
    ]
    doc_ids, labels, rows = [], [], []
    for lineno, ln in enumerate(lines[1:], start=2):
        cells = ln.split("\t")
        if len(cells) != len(header):
            raise DataError(f"{path} line {lineno}: row width mismatch")
        doc_ids.append(cells[0])
        if label_idx is not None:
            labels.append(cells[label_idx])
        try:
            rows.append(
                [float("nan") if cells[i] == "NA" else float(cells[i])
                 for i in feature_idx]
            )
        except ValueError:
            raise DataError(f"{path} line {lineno}: non-numeric feature cell") from None
    return FeatureSet(
        doc_ids=tuple(doc_ids),
        feature_names=tuple(header[i] for i in feature_idx),
        X=np.array(rows, dtype=np.float64),
        labels=tuple(labels) if label_idx is not None else None,
    )


@dataclass(frozen=True)
class ExperimentConfig:
    features_path: str
    label_column: str = "label"
    model: str = "multinomial-logistic"
    folds: int = 10
    selection: str = "none"          # none | boruta | anova
    anova_k: int = 20
    balancing: str = "none"          # none | smote
    scaling: str = "none"            # none | minmax
    seed: int = 0
    validation_fraction: float = 0.0  # per-class holdout before CV
    feature_subset: tuple | None = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise DataError(f"unknown model {self.model!r}; choose from {MODELS}")
        if self.folds < 2:
            raise DataError("folds must be >= 2")
        if self.selection not in ("none", "boruta", "anova"):
            raise DataError(f"unknown selection {self.selection!r}")
        if self.balancing not in ("none", "smote"):
            raise DataError(f"unknown balancing {self.balancing!r}")
        if self.scaling not in ("none", "minmax"):
            raise DataError(f"unknown scaling {self.scaling!r}")
        if not 0.0 <= self.validation_fraction < 1.0:
            raise DataError("validation_fraction must lie in [0, 1)")
