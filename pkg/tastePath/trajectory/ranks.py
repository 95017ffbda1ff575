from typing import Tuple

import numpy as np

from tastePath.models.allocation import AllocationTensor, CandidatePair
from tastePath.models.trajectory import GenreTrajectory, RankMap, RankTrajectory


def user_totals(X: AllocationTensor) -> np.ndarray:
    """U x G listen totals over the feature windows (all but the last one)"""
    return X.pooled_counts(range(X.K - 1))


def build_rank_map(X: AllocationTensor, pair: CandidatePair, totals: np.ndarray = None) -> RankMap:
    """Anchor at rank 0, the user's other genres by descending listen count then genre id"""
    if totals is None:
        totals = user_totals(X)
    row = totals[X.user_row(pair.user)]
    X.genre_col(pair.genre)  # unknown anchors raise
    return RankMap.from_totals(pair.genre, dict(zip(X.genres, row.tolist())))


def rank_transform(traj: GenreTrajectory, rank_map: RankMap) -> RankTrajectory:
    """Replace genres by ranks; missing windows are dropped, repeated ranks kept"""
    ranks: Tuple[int, ...] = tuple(rank_map.rank(g) for g in traj.genres if g is not None)
    return RankTrajectory(ranks=ranks, anchor=traj.anchor, rank_map=rank_map)


def invert(traj: RankTrajectory) -> Tuple[str, ...]:
    return traj.invert()
