from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set, Tuple

import numpy as np

from tastePath.constants import CandidateKind
from tastePath.core.exceptions import ShapeError, UnknownEntityError


@dataclass(frozen=True, order=True)
class CandidatePair:
    """A user-genre pair watched for appearance (A+) or disappearance (A-)"""

    user: str
    genre: str
    kind: CandidateKind

    def key(self) -> str:
        return f"{self.user}\x1f{self.genre}\x1f{self.kind.value}"


@dataclass
class AllocationTensor:
    """
    X[k][u][g]: share of user u's events in window k that are of genre g. Windows are
    0-based, so the penultimate window X^prev is ``values[K - 2]``. ``counts`` holds the
    raw event counts when the tensor was computed from events.
    """

    values: np.ndarray
    users: List[str]
    genres: List[str]
    counts: Optional[np.ndarray] = None
    _user_pos: Dict[str, int] = field(init=False, repr=False)
    _genre_pos: Dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        if self.values.ndim != 3:
            raise ShapeError(f"allocation must be K x U x G, got {self.values.shape}")
        if self.values.shape[1:] != (len(self.users), len(self.genres)):
            raise ShapeError(
                f"allocation shape {self.values.shape} does not match "
                f"{len(self.users)} users x {len(self.genres)} genres"
            )
        if self.counts is not None and self.counts.shape != self.values.shape:
            raise ShapeError("counts and values shapes differ")
        self._user_pos = {u: i for i, u in enumerate(self.users)}
        self._genre_pos = {g: i for i, g in enumerate(self.genres)}

    @property
    def K(self) -> int:
        return self.values.shape[0]

    @property
    def n_users(self) -> int:
        return len(self.users)

    @property
    def n_genres(self) -> int:
        return len(self.genres)

    @property
    def prev(self) -> np.ndarray:
        return self.values[self.K - 2]

    @property
    def target(self) -> np.ndarray:
        return self.values[self.K - 1]

    def user_row(self, user: str) -> int:
        try:
            return self._user_pos[user]
        except KeyError:
            raise UnknownEntityError(f"unknown user {user!r}") from None

    def genre_col(self, genre: str) -> int:
        try:
            return self._genre_pos[genre]
        except KeyError:
            raise UnknownEntityError(f"unknown genre {genre!r}") from None

    def nonempty(self, k: int) -> np.ndarray:
        """Boolean mask over users with at least one event in window k"""
        return self.values[k].sum(axis=1) > 0

    def pooled_counts(self, windows: range) -> np.ndarray:
        """U x G event totals over ``windows``; falls back to summed shares without counts"""
        source = self.counts if self.counts is not None else self.values
        return source[list(windows)].sum(axis=0).astype(float)

    def truncate(self, n_windows: int) -> "AllocationTensor":
        counts = None if self.counts is None else self.counts[:n_windows].copy()
        return AllocationTensor(
            values=self.values[:n_windows].copy(),
            users=list(self.users),
            genres=list(self.genres),
            counts=counts,
        )

    def with_window_zeroed(self, k: int) -> "AllocationTensor":
        values = self.values.copy()
        values[k] = 0.0
        counts = None
        if self.counts is not None:
            counts = self.counts.copy()
            counts[k] = 0
        return AllocationTensor(values=values, users=list(self.users), genres=list(self.genres), counts=counts)


@dataclass
class CoListeningVector:
    """Counts of genres heard right before or after genre ``genre`` in one window"""

    genre: str
    counts: np.ndarray
    genres: List[str]

    def as_dict(self) -> Dict[str, int]:
        return {self.genres[i]: int(c) for i, c in enumerate(self.counts) if c > 0}

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass
class CoListeningTable:
    """
    Sparse eta tensor: for each (window, user row, genre col) with at least one adjacency,
    the neighbor genre columns and their counts.
    """

    n_genres: int
    entries: Dict[Tuple[int, int, int], Tuple[np.ndarray, np.ndarray]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, k: int, u: int, g: int) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        return self.entries.get((k, u, g))

    def vector(self, k: int, u: int, g: int) -> np.ndarray:
        dense = np.zeros(self.n_genres, dtype=np.int64)
        entry = self.entries.get((k, u, g))
        if entry is not None:
            dense[entry[0]] = entry[1]
        return dense

    def rows(self) -> Iterator[Tuple[int, int, int, int, int]]:
        """(window, user, genre, neighbor, count) rows in key order"""
        for (k, u, g) in sorted(self.entries):
            neighbors, counts = self.entries[(k, u, g)]
            for n, c in zip(neighbors.tolist(), counts.tolist()):
                yield k, u, g, n, c


@dataclass
class CandidateSets:
    appearance: Set[CandidatePair] = field(default_factory=set)
    disappearance: Set[CandidatePair] = field(default_factory=set)

    def of(self, kind: CandidateKind) -> List[CandidatePair]:
        pairs = self.appearance if kind == CandidateKind.APPEARANCE else self.disappearance
        return sorted(pairs)

    def __len__(self) -> int:
        return len(self.appearance) + len(self.disappearance)
