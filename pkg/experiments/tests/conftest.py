import numpy as np
import pytest


def write_features_tsv(path, feature_names, rows, labels=None, doc_prefix="d"):
    """Write the metric engine's TSV interface format."""
    header = ["doc_id"]
    if labels is not None:
        header.append("label")
    header.extend(feature_names)
    lines = ["\t".join(header)]
    for i, row in enumerate(rows):
        cells = [f"{doc_prefix}{i}"]
        if labels is not None:
            cells.append(str(labels[i]))
        cells.extend("NA" if v is None or (isinstance(v, float) and np.isnan(v))
                     else f"{v:.6f}" for v in row)
        lines.append("\t".join(cells))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def separable_blobs(n_per_class=20, n_features=6, n_classes=2, seed=0, gap=8.0):
    """Well-separated Gaussian blobs; trivially classifiable."""
    rng = np.random.default_rng(seed)
    rows, labels = [], []
    for cls in range(n_classes):
        center = np.full(n_features, cls * gap)
        block = center + rng.normal(0, 0.5, size=(n_per_class, n_features))
        rows.extend(block.tolist())
        labels.extend([f"c{cls}"] * n_per_class)
    return np.array(rows), np.array(labels)


def planted_noise_features(n_samples=60, n_informative=5, n_noise=20, seed=0):
    """Binary labels carried by the informative block; the rest pure noise."""
    rng = np.random.default_rng(seed)
    y = np.array(["a", "b"])[rng.integers(0, 2, size=n_samples)]
    signal = (y == "b").astype(float)
    informative = np.stack(
        [signal * 2.0 + rng.normal(0, 0.3, size=n_samples) for _ in range(n_informative)],
        axis=1,
    )
    noise = rng.normal(0, 1.0, size=(n_samples, n_noise))
    X = np.hstack([informative, noise])
    return X, y
