"""Feature selection: all-relevant Boruta (shadow features against a
random-forest importance backend) and one-way ANOVA F ranking.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import binom
from sklearn.ensemble import RandomForestClassifier

from .data import DataError


@dataclass(frozen=True)
class BorutaResult:
    confirmed: tuple       # feature indices
    rejected: tuple
    tentative: tuple
    hits: tuple            # per-feature hit counts over the iterations
    n_iter: int

    def confirmed_names(self, names) -> list:
        return [names[i] for i in self.confirmed]


def _impute_median(X: np.ndarray) -> np.ndarray:
    X = np.array(X, dtype=np.float64, copy=True)
    for j in range(X.shape[1]):
        col = X[:, j]
        mask = np.isnan(col)
        if mask.any():
            rest = col[~mask]
            col[mask] = np.median(rest) if rest.size else 0.0
    return X


def boruta_select(
    X,
    y,
    seed: int = 0,
    n_iter: int = 30,
    alpha: float = 0.05,
    n_estimators: int = 200,
) -> BorutaResult:
    """Shadow-feature selection: a feature is a hit in an iteration when
    its importance beats the best column-shuffled shadow; hit counts are
    tested against Binomial(n_iter, 1/2) with Bonferroni correction."""
    X = _impute_median(np.asarray(X, dtype=np.float64))
    y = np.asarray(y)
    n_samples, n_features = X.shape
    if n_samples < 20:
        raise DataError("boruta_select needs at least 20 examples")

    rng = np.random.default_rng(seed)
    constant = [j for j in range(n_features) if np.ptp(X[:, j]) == 0.0]
    hits = np.zeros(n_features, dtype=int)
    for iteration in range(n_iter):
        shadows = X.copy()
        for j in range(n_features):
            rng.shuffle(shadows[:, j])
        stacked = np.hstack([X, shadows])
        forest = RandomForestClassifier(
            n_estimators=n_estimators,
            random_state=seed * 1009 + iteration,
            n_jobs=1,
        )
        forest.fit(stacked, y)
        importances = forest.feature_importances_
        threshold = importances[n_features:].max()
        hits += importances[:n_features] > threshold

    cutoff = alpha / n_features  # Bonferroni over the feature set
    confirmed, rejected, tentative = [], [], []
    for j in range(n_features):
        if j in constant:
            rejected.append(j)
            continue
        if binom.sf(hits[j] - 1, n_iter, 0.5) < cutoff:
            confirmed.append(j)
        elif binom.cdf(hits[j], n_iter, 0.5) < cutoff:
            rejected.append(j)
        else:
            tentative.append(j)
    return BorutaResult(
        confirmed=tuple(confirmed),
        rejected=tuple(rejected),
        tentative=tuple(tentative),
        hits=tuple(int(h) for h in hits),
        n_iter=n_iter,
    )


def anova_f_scores(X, y) -> np.ndarray:
    """One-way ANOVA F statistic per feature column against the labels."""
    X = _impute_median(np.asarray(X, dtype=np.float64))
    y = np.asarray(y)
    classes = sorted(set(y.tolist()))
    if len(classes) < 2:
        raise DataError("anova needs at least two classes")
    n, p = X.shape
    grand = X.mean(axis=0)
    between = np.zeros(p)
    within = np.zeros(p)
    for cls in classes:
        block = X[y == cls]
        diff = block.mean(axis=0) - grand
        between += block.shape[0] * diff * diff
        within += ((block - block.mean(axis=0)) ** 2).sum(axis=0)
    df_between = len(classes) - 1
    df_within = n - len(classes)
    scores = np.zeros(p)
    for j in range(p):
        if (between[j] <= 0.0 and within[j] <= 0.0) or df_within <= 0:
            scores[j] = 0.0  # constant feature (or degenerate split)
        elif within[j] <= 0.0:
            scores[j] = np.inf  # perfect class separation
        else:
            scores[j] = (between[j] / df_between) / (within[j] / df_within)
    return scores


def anova_select(X, y, k: int, names=None) -> list:
    """Top-k features by F score, ranked descending, index tie-break."""
    scores = anova_f_scores(X, y)
    order = sorted(range(len(scores)), key=lambda j: (-scores[j], j))
    chosen = order[: max(k, 0)]
    if names is None:
        return [(j, float(scores[j])) for j in chosen]
    return [(names[j], float(scores[j])) for j in chosen]
