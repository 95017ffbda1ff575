from abc import ABC, abstractmethod
from pathlib import Path
from typing import Union

import joblib
import numpy as np

from tastePath.core.exceptions import SingleClassError


class IClassifier(ABC):
    """Binary classifier returning the probability of the positive class"""

    name: str = "classifier"

    @abstractmethod
    def fit(self, features: np.ndarray, labels: np.ndarray) -> "IClassifier":
        pass

    @abstractmethod
    def predict_proba(self, features: np.ndarray) -> np.ndarray:
        """Positive-class probability per row"""
        pass

    def save(self, path: Union[str, Path]) -> None:
        joblib.dump(self, Path(path))

    @staticmethod
    def load(path: Union[str, Path]) -> "IClassifier":
        model = joblib.load(Path(path))
        if not isinstance(model, IClassifier):
            raise TypeError(f"{path} does not hold a classifier")
        return model

    @staticmethod
    def check_labels(labels: np.ndarray) -> None:
        if len(np.unique(labels)) < 2:
            raise SingleClassError(
                "training labels hold a single class; fall back to the constant classifier"
            )
