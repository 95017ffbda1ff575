import hashlib
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor, CandidatePair, CoListeningTable
from tastePath.models.trajectory import GenreTrajectory, RankMap
from tastePath.trajectory.ranks import build_rank_map, user_totals

logger = get_logger("tastePath.trajectory")


def pair_stream(seed: int, pair: CandidatePair) -> np.random.Generator:
    """Independent generator for one pair, derived from (seed, user, genre)"""
    digest = hashlib.sha256(f"{pair.user}\x1f{pair.genre}".encode("utf-8")).digest()
    return np.random.default_rng(np.random.SeedSequence([seed, int.from_bytes(digest[:8], "little")]))


class TrajectorySampler:
    """
    Draws genre trajectories over the feature windows 0..K-2 of ``X``. At window k a
    genre is drawn from the anchor's co-listening counts when it has any, else from the
    user's allocation row; fully empty windows are marked missing.
    """

    def __init__(self, X: AllocationTensor, colistening: CoListeningTable, seed: int = 0):
        self.X = X
        self.colistening = colistening
        self.seed = seed
        self._totals = user_totals(X)
        self._rank_maps: Dict[CandidatePair, RankMap] = {}

    @property
    def n_positions(self) -> int:
        return self.X.K - 1

    def window_distribution(self, pair: CandidatePair, k: int) -> Optional[np.ndarray]:
        """Probability over genre columns at window k, ``None`` for an empty window"""
        u, g = self.X.user_row(pair.user), self.X.genre_col(pair.genre)
        entry = self.colistening.get(k, u, g)
        if entry is not None and entry[1].sum() > 0:
            p = np.zeros(self.X.n_genres)
            p[entry[0]] = entry[1]
            return p / p.sum()
        row = self.X.values[k, u]
        total = row.sum()
        if total > 0:
            return row / total
        return None

    def is_empty(self, pair: CandidatePair) -> bool:
        """Every trajectory of the pair is empty iff the user has no feature-window listen"""
        u = self.X.user_row(pair.user)
        return not self.X.values[: self.n_positions, u].any()

    def rank_map(self, pair: CandidatePair) -> RankMap:
        if pair not in self._rank_maps:
            self._rank_maps[pair] = build_rank_map(self.X, pair, self._totals)
        return self._rank_maps[pair]

    def sample(self, pair: CandidatePair, n: int) -> List[GenreTrajectory]:
        """n trajectories drawn window by window from the pair's own stream"""
        rng = pair_stream(self.seed, pair)
        draws = np.full((self.n_positions, n), -1, dtype=np.int64)
        for k in range(self.n_positions):
            p = self.window_distribution(pair, k)
            if p is not None:
                draws[k] = rng.choice(len(p), size=n, p=p)
        genres = self.X.genres
        return [
            GenreTrajectory(
                anchor=pair,
                genres=tuple(genres[c] if c >= 0 else None for c in draws[:, i].tolist()),
            )
            for i in range(n)
        ]


def sample_trajectory(
    X: AllocationTensor, colistening: CoListeningTable, pair: CandidatePair, seed: int = 0
) -> GenreTrajectory:
    return TrajectorySampler(X, colistening, seed).sample(pair, 1)[0]


def sampling_reconstruction_curve(
    sampler: TrajectorySampler, pairs: Sequence[CandidatePair], sizes: Sequence[int]
) -> pd.DataFrame:
    """
    For each sample size n, the mean total variation between the empirical genre
    distribution of n sampled trajectories at window k and the user's allocation X^k_u,
    over pairs and nonempty windows.
    """
    X = sampler.X
    rows = []
    for n in sizes:
        distances = []
        for pair in pairs:
            u = X.user_row(pair.user)
            sampled = sampler.sample(pair, n)
            for k in range(sampler.n_positions):
                target = X.values[k, u]
                if target.sum() <= 0:
                    continue
                cols = [X.genre_col(t.genres[k]) for t in sampled]
                empirical = np.bincount(cols, minlength=X.n_genres) / n
                distances.append(0.5 * np.abs(empirical - target).sum())
        mean = float(np.mean(distances)) if distances else float("nan")
        logger.debug(f"reconstruction at n={n}: {mean:.4f} over {len(distances)} windows")
        rows.append({"n": int(n), "mean_tv": mean, "n_windows": len(distances)})
    return pd.DataFrame(rows, columns=["n", "mean_tv", "n_windows"])
