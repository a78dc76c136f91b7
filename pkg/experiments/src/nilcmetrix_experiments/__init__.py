"""Complexity-prediction experiments over metric feature tables."""
from .data import (
    READABILITY_FEATURES,
    DataError,
    ExperimentConfig,
    FeatureSet,
    read_features,
)
from .pipeline import EvalReport, evaluate, stratified_folds, train_eval
from .sampling import smote_balance
from .selection import anova_f_scores, anova_select, boruta_select

__all__ = [
    "DataError",
    "EvalReport",
    "ExperimentConfig",
    "FeatureSet",
    "READABILITY_FEATURES",
    "anova_f_scores",
    "anova_select",
    "boruta_select",
    "evaluate",
    "read_features",
    "smote_balance",
    "stratified_folds",
    "train_eval",
]
