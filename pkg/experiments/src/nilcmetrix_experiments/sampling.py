"""Minority oversampling by nearest-neighbor interpolation (SMOTE).

Synthetic rows are convex combinations of a real minority row and one of
its k nearest minority neighbors (k = 5, clipped to what the class can
offer), generated until every class matches the majority count.
"""
from __future__ import annotations

import numpy as np

from .data import DataError


def smote_balance(X, y, seed: int = 0, k: int = 5):
    """Return (X_balanced, y_balanced); originals first, synthetics after."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y)
    if np.isnan(X).any():
        raise DataError("smote_balance requires imputed (NaN-free) features")
    classes = sorted(set(y.tolist()))
    counts = {cls: int((y == cls).sum()) for cls in classes}
    target = max(counts.values())
    rng = np.random.default_rng(seed)

    new_rows = []
    new_labels = []
    for cls in classes:
        need = target - counts[cls]
        if need == 0:
            continue
        if counts[cls] < 2:
            raise DataError(
                f"class {cls!r} has {counts[cls]} example(s); "
                f"SMOTE needs at least two"
            )
        block = X[y == cls]
        k_eff = min(k, block.shape[0] - 1)
        # pairwise distances within the class
        deltas = block[:, None, :] - block[None, :, :]
        distances = np.sqrt((deltas**2).sum(axis=2))
        np.fill_diagonal(distances, np.inf)
        neighbor_idx = np.argsort(distances, axis=1)[:, :k_eff]
        for _ in range(need):
            i = int(rng.integers(0, block.shape[0]))
            j = int(neighbor_idx[i][int(rng.integers(0, k_eff))])
            u = float(rng.random())
            new_rows.append(block[i] + u * (block[j] - block[i]))
            new_labels.append(cls)

    if not new_rows:
        return X.copy(), y.copy()
    X_out = np.vstack([X, np.array(new_rows)])
    y_out = np.concatenate([y, np.array(new_labels, dtype=y.dtype)])
    return X_out, y_out
