"""Run one configured experiment over a feature TSV and write the
evaluation report (TSV) plus a confusion-matrix text file.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .data import MODELS, DataError, ExperimentConfig
from .pipeline import train_eval


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilcmetrix-experiments")
    parser.add_argument("--features", required=True, help="feature TSV path")
    parser.add_argument("--label-column", default="label")
    parser.add_argument("--model", choices=MODELS, default="multinomial-logistic")
    parser.add_argument("--folds", type=int, default=10)
    parser.add_argument("--selection", choices=("none", "boruta", "anova"),
                        default="none")
    parser.add_argument("--anova-k", type=int, default=20)
    parser.add_argument("--balancing", choices=("none", "smote"), default="none")
    parser.add_argument("--scaling", choices=("none", "minmax"), default="none")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--holdout", type=float, default=0.0,
                        help="per-class validation fraction held out before CV")
    parser.add_argument("--out", default="evalreport",
                        help="output prefix (<out>.tsv, <out>.confusion.txt)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = ExperimentConfig(
            features_path=args.features,
            label_column=args.label_column,
            model=args.model,
            folds=args.folds,
            selection=args.selection,
            anova_k=args.anova_k,
            balancing=args.balancing,
            scaling=args.scaling,
            seed=args.seed,
            validation_fraction=args.holdout,
        )
        report = train_eval(config)
    except (DataError, OSError) as exc:
        print(f"nilcmetrix-experiments: error: {exc}", file=sys.stderr)
        return 2
    Path(f"{args.out}.tsv").write_text(report.to_tsv(), encoding="utf-8")
    Path(f"{args.out}.confusion.txt").write_text(
        report.confusion_text(), encoding="utf-8"
    )
    print(f"macro F1: {report.macro_f1:.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
