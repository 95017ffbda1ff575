from tastePath.predict.baselines import (
    baseline_nmf,
    baseline_popularity,
    baseline_previous,
    normalize_rows,
    popularity_distribution,
)
from tastePath.predict.classifiers import (
    ClassifierFactory,
    ConstantClassifier,
    ForestClassifier,
    IClassifier,
    LogisticClassifier,
)
from tastePath.predict.labels import as_arrays, historical_mean, label_of, label_pairs
from tastePath.predict.nmf import nmf
from tastePath.predict.plug_previous import plug_previous
from tastePath.predict.training import train_classifier, train_or_constant

__all__ = [
    "ClassifierFactory",
    "ConstantClassifier",
    "ForestClassifier",
    "IClassifier",
    "LogisticClassifier",
    "as_arrays",
    "baseline_nmf",
    "baseline_popularity",
    "baseline_previous",
    "historical_mean",
    "label_of",
    "label_pairs",
    "nmf",
    "normalize_rows",
    "plug_previous",
    "popularity_distribution",
    "train_classifier",
    "train_or_constant",
]
