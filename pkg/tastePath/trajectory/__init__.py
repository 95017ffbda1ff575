from tastePath.trajectory.builder import build_pair_trajectories, build_trajectory_set
from tastePath.trajectory.ranks import build_rank_map, invert, rank_transform
from tastePath.trajectory.sampling import (
    TrajectorySampler,
    pair_stream,
    sample_trajectory,
    sampling_reconstruction_curve,
)

__all__ = [
    "TrajectorySampler",
    "build_pair_trajectories",
    "build_rank_map",
    "build_trajectory_set",
    "invert",
    "pair_stream",
    "rank_transform",
    "sample_trajectory",
    "sampling_reconstruction_curve",
]
