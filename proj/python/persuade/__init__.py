"""Persuasion-prediction toolkit.

Thin python surface over the C++ core: corpus ingestion and winner criteria,
BigIssues belief encoding and PCA, linguistic feature extraction, regularized
logistic regression with nested cross-validation and McNemar testing, the two
ideology-controlled prediction tasks, and the planted-effect synthetic corpus
generator.
"""

from persuade._core import (
    Corpus,
    Debate,
    IdeologyKind,
    LexiconSet,
    Opinion,
    PointWeights,
    Round,
    Stance,
    SyntheticParams,
    TaskInstance,
    TaskKind,
    TfidfModel,
    TrainedModel,
    UserProfile,
    Vote,
    VoteDimension,
    all_feature_groups,
    build_task_instances,
    convinced_winner,
    encode_big_issues,
    extract_features,
    generate_synthetic_corpus,
    ideology_classification_experiment,
    language_only_ceiling,
    load_corpus,
    majority_baseline,
    matching_ideology,
    mcnemar,
    nested_cv,
    opinion_similarity,
    pca_project,
    predict,
    run_ablation,
    save_corpus,
    save_issue_catalog,
    stance_changed,
    tokenize,
    total_points,
    train_logreg,
    user_feature_names,
    vote_dimension_correlations,
    winner_by_points,
)

__all__ = [
    "Corpus",
    "Debate",
    "IdeologyKind",
    "LexiconSet",
    "Opinion",
    "PointWeights",
    "Round",
    "Stance",
    "SyntheticParams",
    "TaskInstance",
    "TaskKind",
    "TfidfModel",
    "TrainedModel",
    "UserProfile",
    "Vote",
    "VoteDimension",
    "all_feature_groups",
    "build_task_instances",
    "convinced_winner",
    "encode_big_issues",
    "extract_features",
    "generate_synthetic_corpus",
    "ideology_classification_experiment",
    "language_only_ceiling",
    "load_corpus",
    "majority_baseline",
    "matching_ideology",
    "mcnemar",
    "nested_cv",
    "opinion_similarity",
    "pca_project",
    "predict",
    "run_ablation",
    "save_corpus",
    "save_issue_catalog",
    "stance_changed",
    "tokenize",
    "total_points",
    "train_logreg",
    "user_feature_names",
    "vote_dimension_correlations",
    "winner_by_points",
]

__version__ = "0.1.0"
