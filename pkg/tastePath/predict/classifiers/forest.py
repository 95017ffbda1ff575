import math

import numpy as np
from sklearn.ensemble import RandomForestClassifier

from tastePath.models.prediction import ForestConfig
from tastePath.predict.classifiers.interface import IClassifier


class ForestClassifier(IClassifier):
    """
    CART/Gini random forest with bootstrap and ceil(sqrt(n_features)) features per split.
    The probability is the mean leaf class fraction over trees.
    """

    name = "forest"

    def __init__(self, cfg: ForestConfig = ForestConfig(), n_jobs: int = 1):
        self.cfg = cfg
        self.n_jobs = n_jobs
        self._model = None

    def fit(self, features: np.ndarray, labels: np.ndarray) -> "ForestClassifier":
        self.check_labels(labels)
        n_features = features.shape[1]
        self._model = RandomForestClassifier(
            n_estimators=self.cfg.n_trees,
            criterion="gini",
            max_depth=self.cfg.max_depth,
            min_samples_leaf=self.cfg.min_samples_leaf,
            max_features=max(1, math.ceil(math.sqrt(n_features))),
            bootstrap=self.cfg.bootstrap,
            random_state=self.cfg.seed,
            n_jobs=self.n_jobs,
        )
        self._model.fit(features, labels)
        return self

    def predict_proba(self, features: np.ndarray) -> np.ndarray:
        if self._model is None:
            raise RuntimeError("forest is not fitted")
        positive = list(self._model.classes_).index(1)
        return self._model.predict_proba(features)[:, positive]
