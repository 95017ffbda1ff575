import numpy as np
from sklearn.linear_model import LogisticRegression

from tastePath.predict.classifiers.interface import IClassifier


class LogisticClassifier(IClassifier):
    """L2 logistic regression, a quick stand-in for the forest when debugging"""

    name = "logistic"

    def __init__(self, seed: int = 0, max_iter: int = 1000):
        self.seed = seed
        self.max_iter = max_iter
        self._model = None

    def fit(self, features: np.ndarray, labels: np.ndarray) -> "LogisticClassifier":
        self.check_labels(labels)
        self._model = LogisticRegression(max_iter=self.max_iter, random_state=self.seed)
        self._model.fit(features, labels)
        return self

    def predict_proba(self, features: np.ndarray) -> np.ndarray:
        if self._model is None:
            raise RuntimeError("logistic model is not fitted")
        positive = list(self._model.classes_).index(1)
        return self._model.predict_proba(features)[:, positive]
