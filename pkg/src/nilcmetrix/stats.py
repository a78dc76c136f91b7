"""Two-corpus comparison: Welch's t-test per metric, comparison reports,
and the documents-by-metrics feature matrix with TSV import/export.

The two-sided p-value comes from the Student-t distribution evaluated
through the regularized incomplete beta function (continued fraction,
absolute error well below 1e-10). Sample (n-1) variance is used in the
test statistic; descriptive metrics elsewhere use population variance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .model import Document
from .registry import CATEGORIES, REGISTRY, compute_all, metric_ids
from .resources import EMPTY_BUNDLE, ResourceBundle


class StatsError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Student-t tail probability via the regularized incomplete beta function
# ---------------------------------------------------------------------------

_BETA_EPS = 1e-15
_BETA_MAX_ITER = 400


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            return h
    raise StatsError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise StatsError(f"x must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return x
    ln_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_sf(t: float, df: float) -> float:
    """P(T >= t) for Student's t with df degrees of freedom."""
    if df <= 0:
        raise StatsError(f"degrees of freedom must be positive, got {df}")
    if math.isinf(t):
        return 0.0 if t > 0 else 1.0
    x = df / (df + t * t)
    tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x)
    return tail if t >= 0 else 1.0 - tail


def student_t_two_sided(t: float, df: float) -> float:
    return min(1.0, 2.0 * student_t_sf(abs(t), df))


# ---------------------------------------------------------------------------
# Welch's t-test
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WelchResult:
    t: float
    df: float
    p: float
    mean_a: float
    mean_b: float
    n_a: int
    n_b: int
    note: str | None = None


def _mean_var(sample) -> tuple:
    n = len(sample)
    m = sum(sample) / n
    var = sum((x - m) ** 2 for x in sample) / (n - 1)
    return m, var


def welch_t(a, b) -> WelchResult:
    """Welch's unequal-variance t-test with a two-sided p-value."""
    a = [float(x) for x in a]
    b = [float(x) for x in b]
    if len(a) < 2 or len(b) < 2:
        raise StatsError("welch_t requires at least two observations per sample")
    mean_a, var_a = _mean_var(a)
    mean_b, var_b = _mean_var(b)
    sa, sb = var_a / len(a), var_b / len(b)
    if sa + sb == 0.0:
        if mean_a == mean_b:
            return WelchResult(
                t=0.0, df=float(len(a) + len(b) - 2), p=1.0,
                mean_a=mean_a, mean_b=mean_b, n_a=len(a), n_b=len(b),
                note="both samples constant and equal",
            )
        return WelchResult(
            t=math.copysign(math.inf, mean_a - mean_b),
            df=float(len(a) + len(b) - 2), p=0.0,
            mean_a=mean_a, mean_b=mean_b, n_a=len(a), n_b=len(b),
            note="both samples constant with different means; p=0 by convention",
        )
    t = (mean_a - mean_b) / math.sqrt(sa + sb)
    denom = sa**2 / (len(a) - 1) + sb**2 / (len(b) - 1)
    if denom == 0.0:  # squared variances can underflow to zero
        df = float(len(a) + len(b) - 2)
    else:
        df = (sa + sb) ** 2 / denom
    return WelchResult(
        t=t, df=df, p=student_t_two_sided(t, df),
        mean_a=mean_a, mean_b=mean_b, n_a=len(a), n_b=len(b),
    )


# ---------------------------------------------------------------------------
# Feature matrix
# ---------------------------------------------------------------------------

NA = "NA"
_CATEGORY_ORDER = {name: i for i, name in enumerate(CATEGORIES)}
_METRIC_CATEGORY = {m.id: m.category for m in REGISTRY}


def format_value(value: float | None) -> str:
    return NA if value is None else f"{value:.6f}"


@dataclass(frozen=True)
class FeatureMatrix:
    doc_ids: tuple
    columns: tuple                    # metric ids
    rows: tuple                       # tuple per doc of float | None
    labels: tuple | None = None

    def __post_init__(self):
        if len(set(self.doc_ids)) != len(self.doc_ids):
            raise StatsError("duplicate document ids in feature matrix")
        if self.labels is not None and len(self.labels) != len(self.doc_ids):
            raise StatsError("labels must align with document ids")
        for row in self.rows:
            if len(row) != len(self.columns):
                raise StatsError("feature row width does not match the header")

    def column(self, metric_id: str) -> list:
        idx = self.columns.index(metric_id)
        return [row[idx] for row in self.rows]

    def to_tsv(self) -> str:
        header = ["doc_id"]
        if self.labels is not None:
            header.append("label")
        header.extend(self.columns)
        lines = ["\t".join(header)]
        for i, doc_id in enumerate(self.doc_ids):
            cells = [doc_id]
            if self.labels is not None:
                cells.append(self.labels[i])
            cells.extend(format_value(v) for v in self.rows[i])
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_tsv(text: str) -> "FeatureMatrix":
        lines = [ln for ln in text.split("\n") if ln.strip()]
        if not lines:
            raise StatsError("empty feature matrix")
        header = lines[0].split("\t")
        if not header or header[0] != "doc_id":
            raise StatsError("feature matrix header must start with doc_id")
        has_label = len(header) > 1 and header[1] == "label"
        first_metric = 2 if has_label else 1
        columns = tuple(header[first_metric:])
        doc_ids, labels, rows = [], [], []
        for ln in lines[1:]:
            cells = ln.split("\t")
            if len(cells) != len(header):
                raise StatsError("feature matrix row width does not match the header")
            doc_ids.append(cells[0])
            if has_label:
                labels.append(cells[1])
            rows.append(
                tuple(None if c == NA else float(c) for c in cells[first_metric:])
            )
        return FeatureMatrix(
            doc_ids=tuple(doc_ids),
            columns=columns,
            rows=tuple(rows),
            labels=tuple(labels) if has_label else None,
        )


def export_features(
    corpus,
    bundle: ResourceBundle = EMPTY_BUNDLE,
    labels: dict | None = None,
) -> FeatureMatrix:
    """Compute the full metric vector for every document, in input order."""
    corpus = list(corpus)
    if not corpus:
        raise StatsError("cannot export features for an empty corpus")
    ids = [doc.id for doc in corpus]
    if len(set(ids)) != len(ids):
        raise StatsError("duplicate document ids in corpus")
    columns = tuple(metric_ids())
    rows = []
    for doc in corpus:
        vector = compute_all(doc, bundle)
        rows.append(tuple(vector.values[c] for c in columns))
    label_row = None
    if labels is not None:
        missing = [i for i in ids if i not in labels]
        if missing:
            raise StatsError(f"missing labels for documents: {missing}")
        label_row = tuple(labels[i] for i in ids)
    return FeatureMatrix(
        doc_ids=tuple(ids), columns=columns, rows=tuple(rows), labels=label_row
    )


# ---------------------------------------------------------------------------
# Corpus comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComparisonRow:
    metric: str
    category: str
    result: WelchResult | None
    significant: bool
    direction: str                    # "a", "b" or "equal"; "" when skipped
    skip_reason: str | None = None


@dataclass(frozen=True)
class ComparisonReport:
    alpha: float
    rows: tuple

    @property
    def significant_metrics(self) -> list:
        return [r.metric for r in self.rows if r.significant]

    @property
    def skipped(self) -> list:
        return [(r.metric, r.skip_reason) for r in self.rows if r.skip_reason]

    def row(self, metric: str) -> ComparisonRow:
        for r in self.rows:
            if r.metric == metric:
                return r
        raise KeyError(metric)

    def to_tsv(self) -> str:
        lines = [
            "\t".join(
                ("metric", "category", "mean_a", "mean_b", "t", "df", "p",
                 "significant", "direction")
            )
        ]
        for r in self.rows:
            if r.result is None:
                cells = [r.metric, r.category, NA, NA, NA, NA, NA, "no", NA]
            else:
                cells = [
                    r.metric,
                    r.category,
                    format_value(r.result.mean_a),
                    format_value(r.result.mean_b),
                    format_value(r.result.t),
                    format_value(r.result.df),
                    f"{r.result.p:.6g}",
                    "yes" if r.significant else "no",
                    r.direction or NA,
                ]
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        tested = [r for r in self.rows if r.result is not None]
        lines = [
            f"Compared {len(tested)} metrics at alpha={self.alpha:g}; "
            f"{len(self.significant_metrics)} significant, "
            f"{len(self.skipped)} skipped."
        ]
        for r in self.rows:
            if r.skip_reason:
                lines.append(f"  - {r.metric}: skipped ({r.skip_reason})")
            elif r.significant:
                higher = "corpus A" if r.direction == "a" else "corpus B"
                lines.append(
                    f"  * {r.metric} [{r.category}]: "
                    f"mean_a={r.result.mean_a:.4f} mean_b={r.result.mean_b:.4f} "
                    f"t={r.result.t:.3f} p={r.result.p:.3g} (higher in {higher})"
                )
        return "\n".join(lines) + "\n"


def compare_corpora(
    features_a: FeatureMatrix,
    features_b: FeatureMatrix,
    alpha: float = 0.001,
) -> ComparisonReport:
    """Per-metric Welch tests over the shared columns of two matrices."""
    if not 0.0 < alpha < 1.0:
        raise StatsError(f"alpha must lie in (0, 1), got {alpha}")
    shared = [c for c in features_a.columns if c in set(features_b.columns)]
    if not shared:
        raise StatsError("feature matrices share no metric columns")
    ordered = sorted(
        shared,
        key=lambda c: (_CATEGORY_ORDER.get(_METRIC_CATEGORY.get(c, ""), 99), c),
    )
    rows = []
    for metric in ordered:
        category = _METRIC_CATEGORY.get(metric, "")
        a = [v for v in features_a.column(metric) if v is not None]
        b = [v for v in features_b.column(metric) if v is not None]
        if len(a) < 2 or len(b) < 2:
            rows.append(
                ComparisonRow(
                    metric=metric, category=category, result=None,
                    significant=False, direction="",
                    skip_reason="insufficient valid values",
                )
            )
            continue
        result = welch_t(a, b)
        if result.mean_a == result.mean_b:
            direction = "equal"
        else:
            direction = "a" if result.mean_a > result.mean_b else "b"
        rows.append(
            ComparisonRow(
                metric=metric, category=category, result=result,
                significant=result.p < alpha, direction=direction,
            )
        )
    return ComparisonReport(alpha=alpha, rows=tuple(rows))
