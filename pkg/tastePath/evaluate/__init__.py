from tastePath.evaluate.genre_graph import extended_pathlet_graph, extended_pathlet_graphs, to_dot, to_json
from tastePath.evaluate.metrics import (
    atv,
    auc,
    evaluate_models,
    evaluate_prediction,
    evaluated_rows,
    new_classes_eval,
    plus_minus_eval,
    shifted_previous,
)
from tastePath.evaluate.pathlets import (
    analysis_frame,
    analyze_pathlets,
    diversity,
    diversity_by_popularity,
    pathlet_correlation,
    pathlet_profile,
)
from tastePath.evaluate.variation import decompose_by_intra_variability, split_variation, variation_decomposition

__all__ = [
    "analysis_frame",
    "analyze_pathlets",
    "atv",
    "auc",
    "decompose_by_intra_variability",
    "diversity",
    "diversity_by_popularity",
    "evaluate_models",
    "evaluate_prediction",
    "evaluated_rows",
    "extended_pathlet_graph",
    "extended_pathlet_graphs",
    "new_classes_eval",
    "pathlet_correlation",
    "pathlet_profile",
    "plus_minus_eval",
    "shifted_previous",
    "split_variation",
    "to_dot",
    "to_json",
    "variation_decomposition",
]
