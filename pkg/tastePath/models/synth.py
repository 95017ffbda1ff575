from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from tastePath.models.trajectory import RankTrajectory


class PlantedSpec(BaseModel):
    """Synthetic corpus with planted pathlets; ranks are drawn from 0..rank_alphabet_size-1"""

    model_config = ConfigDict(frozen=True)

    n_pathlets: int = Field(default=20, ge=1)
    pathlet_length_range: Tuple[int, int] = (3, 5)
    rank_alphabet_size: int = Field(default=12, ge=2)
    n_trajectories: int = Field(default=500, ge=1)
    trajectory_length: int = Field(default=15, ge=2)
    noise_prob: float = Field(default=0.1, ge=0.0, le=1.0)
    seed: int = 0

    @model_validator(mode="after")
    def _check(self) -> "PlantedSpec":
        low, high = self.pathlet_length_range
        if low < 2 or high < low:
            raise ValueError("pathlet_length_range must satisfy 2 <= low <= high")
        return self


@dataclass
class PlantedCorpus:
    trajectories: List[RankTrajectory]
    planted: List[Tuple[int, ...]]
    # complete insertions into ``trajectories``; held-out ones are not counted
    planting_counts: Dict[Tuple[int, ...], int] = field(default_factory=dict)
    held_out: List[RankTrajectory] = field(default_factory=list)


@dataclass
class RecoveryReport:
    score: float
    n_planted: int
    recovered: List[Tuple[int, ...]] = field(default_factory=list)
    missed: List[Tuple[int, ...]] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "score": self.score,
            "n_planted": self.n_planted,
            "recovered": ["-".join(map(str, p)) for p in self.recovered],
            "missed": ["-".join(map(str, p)) for p in self.missed],
        }
