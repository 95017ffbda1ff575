from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
import scipy.sparse as sp
from pydantic import BaseModel, ConfigDict, Field

from tastePath import constants

Edge = Tuple[int, int]


@dataclass
class TrajectoryGraph:
    """Smallest directed rank graph on which every trajectory is a walk"""

    nodes: Tuple[int, ...]
    edges: Tuple[Edge, ...]
    edge_index: Dict[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.edge_index:
            self.edge_index = {e: i for i, e in enumerate(self.edges)}

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def to_edge_list(self) -> str:
        lines = [f"{a}\t{b}" for a, b in self.edges]
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class Pathlet:
    """A recurring contiguous rank sequence of at least two nodes"""

    ranks: Tuple[int, ...]
    support: int = 0

    def __len__(self) -> int:
        return len(self.ranks)

    @property
    def edges(self) -> List[Edge]:
        return list(zip(self.ranks[:-1], self.ranks[1:]))

    @property
    def label(self) -> str:
        return "-".join(str(r) for r in self.ranks)


@dataclass
class EdgeEncoding:
    """Binary |E| x |P| and |E| x |D0| edge-incidence matrices"""

    P_mat: sp.csc_matrix
    D0_mat: sp.csc_matrix


class LearnConfig(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = Field(default=constants.DEFAULT_LAMBDA, ge=0.0, alias="lambda")
    learning_rate: float = Field(default=constants.DEFAULT_LEARNING_RATE, gt=0.0)
    max_epochs: int = Field(default=constants.DEFAULT_MAX_EPOCHS, ge=1)
    patience: int = Field(default=constants.DEFAULT_PATIENCE, ge=1)
    stagnation_tol: float = Field(default=constants.DEFAULT_STAGNATION_TOL, ge=0.0)
    top_n: int = Field(default=100, ge=1)
    seed: int = 0

    def with_lambda(self, value: float) -> "LearnConfig":
        return self.model_copy(update={"lambda_": value})


@dataclass
class CodeModel:
    """Learned code alpha (|D0| x |P|, entries in [0, 1]) and per-epoch losses"""

    alpha: np.ndarray
    loss_history: List[float]
    initial_loss: float
    best_epoch: int = 0
    stop_reason: str = "max_epochs"

    @property
    def final_loss(self) -> float:
        """Loss of the returned iterate, never above the initial loss"""
        return min([self.initial_loss] + list(self.loss_history))


@dataclass
class PathletDictionary:
    """Selected pathlets in descending influence"""

    pathlets: List[Pathlet]
    influence: List[float]

    def __len__(self) -> int:
        return len(self.pathlets)

    def __iter__(self):
        return iter(self.pathlets)

    @property
    def max_length(self) -> int:
        return max((len(p) for p in self.pathlets), default=0)

    def labels(self) -> List[str]:
        return [p.label for p in self.pathlets]


@dataclass
class DictionaryMetrics:
    cover_ratio: float
    code_sparsity: float
    mean_pathlets_per_trajectory: float
    n_trajectories: int

    def to_dict(self) -> Dict[str, float]:
        return {
            "cover_ratio": self.cover_ratio,
            "code_sparsity": self.code_sparsity,
            "mean_pathlets_per_trajectory": self.mean_pathlets_per_trajectory,
            "n_trajectories": self.n_trajectories,
        }
