"""Command-line interface: metric catalog, per-document computation,
two-corpus comparison and labelled feature export.

Exit codes: 0 success, 1 usage error, 2 data error. Directory inputs are
processed in lexicographic filename order so runs are reproducible, and
``--jobs N`` parallelism never changes the output bytes.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import os
import sys
from pathlib import Path

from .ingest import ParseError, ingest_plaintext, parse_conllu
from .model import Document, ValidationError
from .registry import compute_all, list_metrics, metric_ids
from .resources import EMPTY_BUNDLE, ResourceError, load_bundle
from .stats import FeatureMatrix, StatsError, compare_corpora, export_features

RESOURCES_ENV = "NILCMETRIX_RESOURCES"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_SUFFIXES = {"conllu": (".conllu", ".conll"), "text": (".txt", ".text")}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class DataError(Exception):
    pass


def _collect_inputs(paths, fmt: str) -> list:
    files: list[Path] = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            suffixes = _SUFFIXES[fmt]
            found = sorted(
                p for p in path.iterdir()
                if p.is_file() and p.suffix.lower() in suffixes
            )
            if not found:
                raise DataError(f"no {fmt} files found in directory {path}")
            files.extend(found)
        elif path.is_file():
            files.append(path)
        else:
            raise DataError(f"input not found: {path}")
    return files


def _read_document(path: Path, fmt: str) -> Document:
    data = path.read_bytes()
    try:
        if fmt == "conllu":
            return parse_conllu(data, doc_id=path.stem)
        return ingest_plaintext(data, doc_id=path.stem)
    except (ParseError, ValidationError) as exc:
        raise DataError(f"{path}: {exc}") from exc


def _load_corpus(paths, fmt: str) -> list:
    docs = [_read_document(p, fmt) for p in _collect_inputs(paths, fmt)]
    seen = set()
    for doc in docs:
        if doc.id in seen:
            raise DataError(f"duplicate document id {doc.id!r} across inputs")
        seen.add(doc.id)
    return docs


def _resolve_bundle(manifest: str | None):
    if manifest is None:
        manifest = os.environ.get(RESOURCES_ENV)
    if manifest is None:
        return EMPTY_BUNDLE
    try:
        return load_bundle(manifest)
    except ResourceError as exc:
        raise DataError(str(exc)) from exc


def _vector_values(doc: Document, bundle) -> tuple:
    vector = compute_all(doc, bundle)
    return tuple(vector.values[c] for c in metric_ids())


_WORKER_BUNDLE = None


def _worker_init(manifest: str | None):
    global _WORKER_BUNDLE
    _WORKER_BUNDLE = _resolve_bundle(manifest)


def _worker_compute(doc: Document) -> tuple:
    return _vector_values(doc, _WORKER_BUNDLE)


def _compute_matrix(docs, bundle, jobs: int, manifest: str | None) -> FeatureMatrix:
    if jobs > 1 and len(docs) > 1:
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=jobs, initializer=_worker_init, initargs=(manifest,)
        ) as pool:
            rows = list(pool.map(_worker_compute, docs))
    else:
        rows = [_vector_values(doc, bundle) for doc in docs]
    return FeatureMatrix(
        doc_ids=tuple(d.id for d in docs),
        columns=tuple(metric_ids()),
        rows=tuple(rows),
    )


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _read_labels(path: str) -> dict:
    labels = {}
    try:
        lines = Path(path).read_text(encoding="utf-8").split("\n")
    except OSError as exc:
        raise DataError(f"cannot read label file {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        cells = line.split("\t")
        if len(cells) != 2:
            raise DataError(f"{path} line {lineno}: expected doc_id<TAB>label")
        labels[cells[0]] = cells[1]
    if not labels:
        raise DataError(f"label file {path} is empty")
    return labels


def _cmd_list(args) -> int:
    lines = []
    if args.format == "tsv":
        lines.append("\t".join(("id", "category", "requirements", "definition")))
        for m in list_metrics():
            lines.append(
                "\t".join((m.id, m.category, ",".join(m.requires) or "-", m.description))
            )
    else:
        for m in list_metrics():
            req = f" (requires {', '.join(m.requires)})" if m.requires else ""
            lines.append(f"{m.id} [{m.category}]: {m.description}{req}")
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_compute(args) -> int:
    docs = _load_corpus(args.input, args.format)
    bundle = _resolve_bundle(args.resources)
    matrix = _compute_matrix(docs, bundle, args.jobs, args.resources)
    _write_output(matrix.to_tsv(), args.out)
    return EXIT_OK


def _cmd_compare(args) -> int:
    bundle = _resolve_bundle(args.resources)
    docs_a = _load_corpus([args.a], args.format)
    docs_b = _load_corpus([args.b], args.format)
    features_a = _compute_matrix(docs_a, bundle, args.jobs, args.resources)
    features_b = _compute_matrix(docs_b, bundle, args.jobs, args.resources)
    try:
        report = compare_corpora(features_a, features_b, alpha=args.alpha)
    except StatsError as exc:
        raise DataError(str(exc)) from exc
    text = report.to_text() if args.report_format == "text" else report.to_tsv()
    _write_output(text, args.out)
    return EXIT_OK


def _cmd_export(args) -> int:
    docs = _load_corpus(args.input, args.format)
    bundle = _resolve_bundle(args.resources)
    labels = _read_labels(args.labels) if args.labels else None
    try:
        matrix = export_features(docs, bundle, labels=labels)
    except StatsError as exc:
        raise DataError(str(exc)) from exc
    _write_output(matrix.to_tsv(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nilcmetrix", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="print the metric catalog")
    p_list.add_argument("--format", choices=("tsv", "text"), default="tsv")
    p_list.add_argument("--out", default=None)
    p_list.set_defaults(fn=_cmd_list)

    common = {
        "--format": dict(dest="format", choices=("conllu", "text"), default="conllu"),
        "--resources": dict(dest="resources", default=None,
                            help=f"resource manifest (or ${RESOURCES_ENV})"),
        "--jobs": dict(dest="jobs", type=int, default=1),
        "--out": dict(dest="out", default=None),
    }

    p_compute = sub.add_parser("compute", help="metric vectors for documents")
    p_compute.add_argument("--input", nargs="+", required=True)
    for flag, kwargs in common.items():
        p_compute.add_argument(flag, **kwargs)
    p_compute.set_defaults(fn=_cmd_compute)

    p_compare = sub.add_parser("compare", help="Welch comparison of two corpora")
    p_compare.add_argument("--a", required=True, help="first corpus directory")
    p_compare.add_argument("--b", required=True, help="second corpus directory")
    p_compare.add_argument("--alpha", type=float, default=0.001)
    p_compare.add_argument("--report-format", choices=("tsv", "text"), default="tsv")
    for flag, kwargs in common.items():
        p_compare.add_argument(flag, **kwargs)
    p_compare.set_defaults(fn=_cmd_compare)

    p_export = sub.add_parser("export-features", help="labelled feature matrix TSV")
    p_export.add_argument("--input", nargs="+", required=True)
    p_export.add_argument("--labels", default=None, help="doc_id<TAB>label file")
    for flag, kwargs in common.items():
        p_export.add_argument(flag, **kwargs)
    p_export.set_defaults(fn=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    if getattr(args, "alpha", None) is not None and not 0.0 < args.alpha < 1.0:
        print("nilcmetrix: error: --alpha must lie in (0, 1)", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "jobs", 1) < 1:
        print("nilcmetrix: error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except DataError as exc:
        print(f"nilcmetrix: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    raise SystemExit(main())
