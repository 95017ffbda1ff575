from typing import List, Optional

from tastePath.logger import get_logger
from tastePath.models.prediction import ClassifierReport, ForestConfig, LabeledPair
from tastePath.predict.classifiers import ClassifierFactory, ConstantClassifier, IClassifier
from tastePath.predict.labels import as_arrays

logger = get_logger("tastePath.predict")


def train_classifier(
    data: List[LabeledPair],
    cfg: ForestConfig = ForestConfig(),
    factory: Optional[ClassifierFactory] = None,
) -> IClassifier:
    """
    Fit the configured classifier (the forest by default) on labelled pairs.

    Raises:
        SingleClassError: the labels hold one class only
    """
    factory = factory or ClassifierFactory(cfg)
    features, labels = as_arrays(data)
    classifier = factory.create(cfg.classifier)
    classifier.fit(features, labels)
    logger.info(f"trained {classifier.name} on {len(labels)} pairs, {int(labels.sum())} positive")
    return classifier


def train_or_constant(
    data: List[LabeledPair], kind: str, cfg: ForestConfig = ForestConfig(), factory: Optional[ClassifierFactory] = None
):
    """Like ``train_classifier`` but falls back to the class prior on single-class data"""
    features, labels = as_arrays(data)
    if len(set(labels.tolist())) < 2:
        logger.warning(f"{kind} labels hold one class; using the constant classifier")
        classifier: IClassifier = ConstantClassifier.from_labels(labels)
    else:
        classifier = train_classifier(data, cfg, factory)
    report = ClassifierReport(
        kind=kind, n_train=len(labels), n_positive=int(labels.sum()), classifier=classifier.name
    )
    return classifier, report
