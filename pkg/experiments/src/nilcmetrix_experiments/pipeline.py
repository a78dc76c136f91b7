"""Cross-validated training and evaluation.

Hygiene rule enforced throughout: imputation, scaling, selection and
balancing are fit on the training folds only and applied (never refit)
to the test fold. Per-fold seeds derive deterministically from the
master seed, so a fixed configuration reproduces bit-for-bit.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sklearn.ensemble import RandomForestClassifier
from sklearn.linear_model import LogisticRegression
from sklearn.naive_bayes import GaussianNB
from sklearn.neural_network import MLPClassifier
from sklearn.svm import SVC

from .data import DataError, ExperimentConfig, FeatureSet, read_features
from .sampling import smote_balance
from .selection import anova_select, boruta_select


@dataclass(frozen=True)
class EvalReport:
    classes: tuple
    per_class_f1: dict
    macro_f1: float
    confusion: np.ndarray            # cross-validated confusion matrix
    selected_features: tuple         # (name, weight) pairs, reporting only
    validation_per_class_f1: dict | None = None
    validation_macro_f1: float | None = None
    validation_confusion: np.ndarray | None = None

    def to_tsv(self) -> str:
        lines = ["section\tname\tvalue"]
        for cls in self.classes:
            lines.append(f"f1\t{cls}\t{self.per_class_f1[cls]:.6f}")
        lines.append(f"f1_macro\t-\t{self.macro_f1:.6f}")
        if self.validation_macro_f1 is not None:
            for cls in self.classes:
                value = self.validation_per_class_f1[cls]
                lines.append(f"validation_f1\t{cls}\t{value:.6f}")
            lines.append(f"validation_f1_macro\t-\t{self.validation_macro_f1:.6f}")
        for name, weight in self.selected_features:
            lines.append(f"selected\t{name}\t{weight:.6f}")
        return "\n".join(lines) + "\n"

    def _matrix_lines(self, matrix, title) -> list:
        width = max(len(str(c)) for c in self.classes) + 2
        lines = [title, "rows: true class, columns: predicted"]
        lines.append(" " * width + "".join(str(c).rjust(width) for c in self.classes))
        for i, cls in enumerate(self.classes):
            lines.append(
                str(cls).rjust(width)
                + "".join(str(int(v)).rjust(width) for v in matrix[i])
            )
        return lines

    def confusion_text(self) -> str:
        lines = self._matrix_lines(self.confusion, "cross-validation")
        if self.validation_confusion is not None:
            lines.append("")
            lines.extend(self._matrix_lines(self.validation_confusion, "validation holdout"))
        return "\n".join(lines) + "\n"


def build_model(name: str, seed: int):
    # Hyperparameters follow the replication defaults: linear SVM C=0.025,
    # RBF C=1, forest depth 5, MLP with 100 hidden units; the multinomial
    # logistic regression uses a weak ridge (C=1000) with lbfgs.
    if name == "multinomial-logistic":
        return LogisticRegression(C=1000.0, max_iter=5000, random_state=seed)
    if name == "linear-svm":
        return SVC(kernel="linear", C=0.025, random_state=seed)
    if name == "rbf-svm":
        return SVC(kernel="rbf", C=1.0, random_state=seed)
    if name == "random-forest":
        return RandomForestClassifier(max_depth=5, random_state=seed, n_jobs=1)
    if name == "mlp":
        return MLPClassifier(hidden_layer_sizes=(100,), max_iter=2000, random_state=seed)
    if name == "naive-bayes":
        return GaussianNB()
    raise DataError(f"unknown model {name!r}")


def stratified_folds(labels, n_folds: int, seed: int) -> list:
    """Deterministic stratified folds; every fold sees every class."""
    labels = np.asarray(labels)
    rng = np.random.default_rng(seed)
    classes = sorted(set(labels.tolist()))
    folds = [[] for _ in range(n_folds)]
    for cls in classes:
        idx = np.flatnonzero(labels == cls)
        if idx.size < n_folds:
            raise DataError(
                f"class {cls!r} has {idx.size} examples but {n_folds} folds were "
                f"requested; reduce the fold count or group small classes"
            )
        rng.shuffle(idx)
        for i, sample in enumerate(idx):
            folds[i % n_folds].append(int(sample))
    out = []
    all_idx = set(range(labels.size))
    for fold in folds:
        test = sorted(fold)
        train = sorted(all_idx - set(test))
        out.append((np.array(train), np.array(test)))
    return out


class _FoldTransform:
    """Imputation + scaling + selection fit on the training block only."""

    def __init__(self, X_train, y_train, config: ExperimentConfig, seed: int):
        self.medians = np.nanmedian(X_train, axis=0)
        self.medians = np.where(np.isnan(self.medians), 0.0, self.medians)
        X = self._fill(X_train)

        self.lo = self.hi = None
        if config.scaling == "minmax":
            self.lo = X.min(axis=0)
            self.hi = X.max(axis=0)
            X = self._scale(X)

        self.keep = np.arange(X.shape[1])
        if config.selection == "anova":
            ranked = anova_select(X, y_train, config.anova_k)
            self.keep = np.array(sorted(j for j, _ in ranked))
        elif config.selection == "boruta":
            result = boruta_select(X, y_train, seed=seed)
            confirmed = result.confirmed
            if confirmed:
                self.keep = np.array(confirmed)
        self.X_train = X[:, self.keep]

    def _fill(self, X):
        X = np.array(X, dtype=np.float64, copy=True)
        mask = np.isnan(X)
        if mask.any():
            X[mask] = np.broadcast_to(self.medians, X.shape)[mask]
        return X

    def _scale(self, X):
        span = self.hi - self.lo
        scaled = np.zeros_like(X)
        nonzero = span != 0
        scaled[:, nonzero] = (X[:, nonzero] - self.lo[nonzero]) / span[nonzero]
        return scaled

    def apply(self, X):
        X = self._fill(X)
        if self.lo is not None:
            X = self._scale(X)
        return X[:, self.keep]


def _f1_scores(y_true, y_pred, classes) -> dict:
    scores = {}
    for cls in classes:
        tp = int(((y_true == cls) & (y_pred == cls)).sum())
        fp = int(((y_true != cls) & (y_pred == cls)).sum())
        fn = int(((y_true == cls) & (y_pred != cls)).sum())
        denom = 2 * tp + fp + fn
        scores[cls] = (2 * tp / denom) if denom else 0.0
    return scores


def _holdout_split(labels, fraction: float, seed: int):
    labels = np.asarray(labels)
    rng = np.random.default_rng(seed + 77)
    classes = sorted(set(labels.tolist()))
    held = []
    for cls in classes:
        idx = np.flatnonzero(labels == cls)
        n_val = int(np.floor(fraction * idx.size))
        if n_val == 0:
            continue
        rng.shuffle(idx)
        held.extend(int(i) for i in idx[:n_val])
    held = sorted(held)
    rest = sorted(set(range(labels.size)) - set(held))
    return np.array(rest), np.array(held)


def evaluate(features: FeatureSet, config: ExperimentConfig) -> EvalReport:
    """Run the configured pipeline under stratified k-fold CV."""
    if features.labels is None:
        raise DataError("feature table has no label column")
    if config.feature_subset is not None:
        features = features.subset(config.feature_subset)
    X_all = features.X
    y_all = np.array(features.labels)
    classes = tuple(sorted(set(y_all.tolist())))

    val_idx = np.array([], dtype=int)
    work_idx = np.arange(y_all.size)
    if config.validation_fraction > 0:
        work_idx, val_idx = _holdout_split(
            y_all, config.validation_fraction, config.seed
        )
    X, y = X_all[work_idx], y_all[work_idx]

    folds = stratified_folds(y, config.folds, config.seed)
    y_pred = np.empty(y.size, dtype=y.dtype)
    for fold_no, (train, test) in enumerate(folds):
        fold_seed = config.seed * 1000 + fold_no
        transform = _FoldTransform(X[train], y[train], config, fold_seed)
        X_train, y_train = transform.X_train, y[train]
        if config.balancing == "smote":
            X_train, y_train = smote_balance(X_train, y_train, seed=fold_seed)
        model = build_model(config.model, fold_seed)
        model.fit(X_train, y_train)
        y_pred[test] = model.predict(transform.apply(X[test]))

    per_class = _f1_scores(y, y_pred, classes)
    macro = sum(per_class.values()) / len(classes)
    confusion = np.zeros((len(classes), len(classes)))
    index = {cls: i for i, cls in enumerate(classes)}
    for true, pred in zip(y, y_pred):
        confusion[index[true], index[pred]] += 1

    val_per_class = None
    val_macro = None
    val_confusion = None
    if val_idx.size:
        transform = _FoldTransform(X, y, config, config.seed)
        X_train, y_train = transform.X_train, y
        if config.balancing == "smote":
            X_train, y_train = smote_balance(X_train, y_train, seed=config.seed)
        model = build_model(config.model, config.seed)
        model.fit(X_train, y_train)
        val_pred = model.predict(transform.apply(X_all[val_idx]))
        val_per_class = _f1_scores(y_all[val_idx], val_pred, classes)
        val_macro = sum(val_per_class.values()) / len(classes)
        val_confusion = np.zeros((len(classes), len(classes)))
        for true, pred in zip(y_all[val_idx], val_pred):
            val_confusion[index[true], index[pred]] += 1

    # reporting-only selection summary over the full working data
    selected: tuple = ()
    if config.selection == "anova":
        transform = _FoldTransform(X, y, config, config.seed)
        ranked = anova_select(
            transform.X_train, y, config.anova_k,
            names=[features.feature_names[j] for j in transform.keep],
        )
        selected = tuple(ranked)
    elif config.selection == "boruta":
        filled = _FoldTransform(
            X, y,
            ExperimentConfig(
                features_path=config.features_path, model=config.model,
                folds=config.folds, scaling=config.scaling, seed=config.seed,
            ),
            config.seed,
        )
        result = boruta_select(filled.X_train, y, seed=config.seed)
        selected = tuple(
            (features.feature_names[j], result.hits[j] / result.n_iter)
            for j in result.confirmed
        )

    return EvalReport(
        classes=classes,
        per_class_f1=per_class,
        macro_f1=macro,
        confusion=confusion,
        selected_features=selected,
        validation_per_class_f1=val_per_class,
        validation_macro_f1=val_macro,
        validation_confusion=val_confusion,
    )


def train_eval(config: ExperimentConfig) -> EvalReport:
    features = read_features(config.features_path, config.label_column)
    return evaluate(features, config)
