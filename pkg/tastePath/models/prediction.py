from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from tastePath import constants
from tastePath.models.allocation import CandidatePair


@dataclass
class LabeledPair:
    pair: CandidatePair
    features: np.ndarray
    label: int


class ForestConfig(BaseModel):
    """Random forest settings; feature subsampling is ceil(sqrt(n_features)) per split"""

    model_config = ConfigDict(frozen=True)

    n_trees: int = Field(default=100, ge=1)
    max_depth: int = Field(default=8, ge=1)
    min_samples_leaf: int = Field(default=5, ge=1)
    bootstrap: bool = True
    seed: int = 0
    classifier: str = "forest"


class NMFConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    rank: int = Field(default=constants.DEFAULT_NMF_RANK, ge=1)
    iters: int = Field(default=constants.DEFAULT_NMF_ITERS, ge=1)
    tol: float = Field(default=constants.DEFAULT_NMF_TOL, ge=0.0)
    seed: int = 0


@dataclass
class PredictionMatrix:
    """
    Predicted next-window allocation, one row per user. ``excluded`` flags rows left
    all-zero (users with no signal), which metrics skip.
    """

    name: str
    values: np.ndarray
    users: List[str]
    genres: List[str]
    excluded: np.ndarray = None
    flags: Dict[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        if self.excluded is None:
            self.excluded = self.values.sum(axis=1) <= 0

    @property
    def n_excluded(self) -> int:
        return int(self.excluded.sum())

    def row_sums(self) -> np.ndarray:
        return self.values.sum(axis=1)


@dataclass
class NMFResult:
    W: np.ndarray
    H: np.ndarray
    objective: List[float]
    converged: bool

    def reconstruction(self) -> np.ndarray:
        return self.W @ self.H


@dataclass
class ClassifierReport:
    """Training summary of one sub-model"""

    kind: str
    n_train: int
    n_positive: int
    classifier: str
    train_auc: Optional[float] = None
