import numpy as np

from tastePath.predict.classifiers.interface import IClassifier


class ConstantClassifier(IClassifier):
    """Predicts the same probability for every input; ``fit`` learns nothing"""

    name = "constant"

    def __init__(self, probability: float = 0.0):
        self.probability = float(probability)

    @classmethod
    def from_labels(cls, labels: np.ndarray) -> "ConstantClassifier":
        """Class prior of ``labels``, the fallback for single-class training data"""
        return cls(float(np.mean(labels)) if len(labels) else 0.0)

    def fit(self, features: np.ndarray, labels: np.ndarray) -> "ConstantClassifier":
        return self

    def predict_proba(self, features: np.ndarray) -> np.ndarray:
        return np.full(len(features), self.probability)
