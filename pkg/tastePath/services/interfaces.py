from abc import ABC, abstractmethod
from typing import List, Optional

from tastePath.models.manifest import StageManifest
from tastePath.models.metrics import MetricsReport
from tastePath.models.synth import RecoveryReport


class IPipelineService(ABC):
    """
    One method per pipeline stage. Each stage reads the artifacts of the stages before it,
    writes its own under ``output_dir/<stage>`` and records a manifest.
    """

    @abstractmethod
    def ingest(self) -> StageManifest:
        """Load events, build the allocation tensor, co-listening table and candidate sets"""
        pass

    @abstractmethod
    def trajectories(self) -> StageManifest:
        """Sample the dictionary trajectory set and the per-pair embedding trajectories"""
        pass

    @abstractmethod
    def mine(self) -> StageManifest:
        """Induce the rank graph and mine candidate pathlets"""
        pass

    @abstractmethod
    def learn(self) -> StageManifest:
        """Fit the sparse code and select the pathlet dictionary"""
        pass

    @abstractmethod
    def embed(self, per_pair: Optional[int] = None) -> StageManifest:
        pass

    @abstractmethod
    def predict(self) -> StageManifest:
        """Train the appearance/disappearance classifiers and write the four predictions"""
        pass

    @abstractmethod
    def evaluate(self, oracle: bool = False) -> List[MetricsReport]:
        pass

    @abstractmethod
    def analyze(self) -> StageManifest:
        pass

    @abstractmethod
    def sweep(self) -> StageManifest:
        """Cover ratio and code sparsity over the configured sparsity weights"""
        pass

    @abstractmethod
    def synth(self) -> RecoveryReport:
        """Planted-pathlet recovery on a synthetic corpus"""
        pass
