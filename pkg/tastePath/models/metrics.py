from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass
class MetricsReport:
    """One row of the prediction table"""

    model: str
    atv: float
    plus_minus_auc: Optional[float]
    new_classes_auc: Optional[float]
    n_users_evaluated: int
    excluded_users: int
    shifted: bool = False  # AUCs computed with the one-window shift

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model,
            "atv": self.atv,
            "plus_minus_auc": self.plus_minus_auc,
            "new_classes_auc": self.new_classes_auc,
            "n_users_evaluated": self.n_users_evaluated,
            "excluded_users": self.excluded_users,
            "shifted": self.shifted,
        }


@dataclass
class PathletProfile:
    ranks: Tuple[int, ...]
    inertial: bool
    mean_rank: float
    diversity: float


@dataclass
class PathletAnalysis:
    """Per-pathlet profile joined with its correlations to both outcomes"""

    profile: PathletProfile
    corr_appearance: float = 0.0
    corr_disappearance: float = 0.0

    @property
    def inertial(self) -> bool:
        return self.profile.inertial

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pathlet": "-".join(str(r) for r in self.profile.ranks),
            "inertial": self.profile.inertial,
            "mean_rank": self.profile.mean_rank,
            "diversity": self.profile.diversity,
            "corr_appearance": self.corr_appearance,
            "corr_disappearance": self.corr_disappearance,
        }


@dataclass
class GenreGraph:
    """Weighted directed genre graph induced by extended pathlets for one outcome"""

    genre: str
    outcome: str
    edges: List[Tuple[str, str, float]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.edges)

    def weight(self, src: str, dst: str) -> float:
        for a, b, w in self.edges:
            if a == src and b == dst:
                return w
        return 0.0
