from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from tastePath.core.exceptions import UnknownEntityError
from tastePath.models.allocation import CandidatePair


@dataclass(frozen=True)
class GenreTrajectory:
    """One sampled genre per window 1..K-1; ``None`` marks an empty window"""

    anchor: CandidatePair
    genres: Tuple[Optional[str], ...]

    def __len__(self) -> int:
        return len(self.genres)

    @property
    def missing(self) -> List[int]:
        return [i for i, g in enumerate(self.genres) if g is None]


@dataclass
class RankMap:
    """
    Genre -> rank for one user-genre pair: the anchor genre is rank 0, the user's other
    genres follow by descending listen count over windows 1..K-1, ties by genre id.
    """

    anchor: str
    ranks: Dict[str, int]
    _genres: Dict[int, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._genres = {r: g for g, r in self.ranks.items()}

    @classmethod
    def from_totals(cls, anchor: str, totals: Mapping[str, float]) -> "RankMap":
        others = sorted(
            (g for g, c in totals.items() if c > 0 and g != anchor),
            key=lambda g: (-totals[g], g),
        )
        ranks = {anchor: 0}
        ranks.update({g: i + 1 for i, g in enumerate(others)})
        return cls(anchor=anchor, ranks=ranks)

    def __len__(self) -> int:
        return len(self.ranks)

    def rank(self, genre: str) -> int:
        try:
            return self.ranks[genre]
        except KeyError:
            raise UnknownEntityError(f"genre {genre!r} is not ranked for anchor {self.anchor!r}") from None

    def genre(self, rank: int) -> str:
        try:
            return self._genres[rank]
        except KeyError:
            raise UnknownEntityError(f"rank {rank} is not mapped for anchor {self.anchor!r}") from None


@dataclass
class RankTrajectory:
    """A genre trajectory with genres replaced by the pair's ranks, missing windows dropped"""

    ranks: Tuple[int, ...]
    anchor: CandidatePair
    rank_map: RankMap

    def __len__(self) -> int:
        return len(self.ranks)

    def __iter__(self):
        return iter(self.ranks)

    @property
    def n_edges(self) -> int:
        return max(len(self.ranks) - 1, 0)

    def invert(self) -> Tuple[str, ...]:
        return tuple(self.rank_map.genre(r) for r in self.ranks)


@dataclass
class TrajectorySet:
    """Trajectories drawn for dictionary learning plus a disjoint held-out draw"""

    selected: List[RankTrajectory] = field(default_factory=list)
    held_out: List[RankTrajectory] = field(default_factory=list)
