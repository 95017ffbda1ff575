from typing import Callable, Dict

from tastePath.core.exceptions import ConfigError
from tastePath.models.prediction import ForestConfig
from tastePath.predict.classifiers.constant import ConstantClassifier
from tastePath.predict.classifiers.forest import ForestClassifier
from tastePath.predict.classifiers.interface import IClassifier
from tastePath.predict.classifiers.logistic import LogisticClassifier


class ClassifierFactory:
    """Builds fresh classifiers by name: forest, logistic or constant"""

    def __init__(self, cfg: ForestConfig = ForestConfig(), n_jobs: int = 1):
        self.cfg = cfg
        self.n_jobs = n_jobs
        self._builders: Dict[str, Callable[[], IClassifier]] = {
            ForestClassifier.name: lambda: ForestClassifier(self.cfg, self.n_jobs),
            LogisticClassifier.name: lambda: LogisticClassifier(self.cfg.seed),
            ConstantClassifier.name: lambda: ConstantClassifier(0.0),
        }

    @property
    def names(self):
        return sorted(self._builders)

    def create(self, name: str = None) -> IClassifier:
        name = name or self.cfg.classifier
        if name not in self._builders:
            raise ConfigError(f"unknown classifier {name!r}, expected one of {self.names}")
        return self._builders[name]()
