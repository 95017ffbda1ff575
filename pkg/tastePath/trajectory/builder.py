from collections import defaultdict
from typing import Dict, Iterable, List

import numpy as np
from joblib import Parallel, delayed

from tastePath import constants
from tastePath.core.exceptions import EmptyInputError, UsageError
from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor, CandidatePair, CoListeningTable
from tastePath.models.trajectory import RankTrajectory, TrajectorySet
from tastePath.trajectory.ranks import rank_transform
from tastePath.trajectory.sampling import TrajectorySampler

logger = get_logger("tastePath.trajectory")


def _pair_trajectories(sampler: TrajectorySampler, pair: CandidatePair, n: int, picks: List[int]):
    sampled = sampler.sample(pair, n)
    rank_map = sampler.rank_map(pair)
    return [rank_transform(sampled[i], rank_map) for i in picks]


def build_trajectory_set(
    X: AllocationTensor,
    colistening: CoListeningTable,
    candidates: Iterable[CandidatePair],
    n_per_pair: int = constants.DEFAULT_N_PER_PAIR,
    total: int = constants.DEFAULT_TOTAL_TRAJECTORIES,
    seed: int = 0,
    holdout: int = 0,
    n_jobs: int = 1,
) -> TrajectorySet:
    """
    Sample ``n_per_pair`` rank trajectories per candidate pair and draw ``total`` of them
    uniformly without replacement, plus up to ``holdout`` more from the remainder.

    Pairs whose trajectories are all empty are discarded before the draw. Only the
    drawn trajectories are materialized: the draw picks (pair, sample) indices first,
    then each touched pair is sampled from its own stream.

    Raises:
        UsageError: total is not positive
        EmptyInputError: no candidate pair yields a nonempty trajectory
    """
    if total <= 0:
        raise UsageError("total must be a positive number of trajectories")
    if n_per_pair <= 0:
        raise UsageError("n_per_pair must be positive")

    sampler = TrajectorySampler(X, colistening, seed)
    pairs = sorted(candidates)
    usable = [p for p in pairs if not sampler.is_empty(p)]
    logger.counted_warning(len(pairs) - len(usable), "discarded candidate pairs without any feature-window listen")
    if not usable:
        raise EmptyInputError("no candidate pair yields a nonempty trajectory")

    population = len(usable) * n_per_pair
    n_selected = min(total, population)
    n_held = min(max(holdout, 0), population - n_selected)
    rng = np.random.default_rng(seed)
    drawn = rng.choice(population, size=n_selected + n_held, replace=False)
    selected_idx, held_idx = np.sort(drawn[:n_selected]), np.sort(drawn[n_selected:])

    picks: Dict[int, List[int]] = defaultdict(list)
    for idx in np.concatenate([selected_idx, held_idx]).tolist():
        picks[idx // n_per_pair].append(idx % n_per_pair)
    order = sorted(picks)

    results = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_pair_trajectories)(sampler, usable[p], n_per_pair, sorted(set(picks[p]))) for p in order
    )
    by_index: Dict[int, RankTrajectory] = {}
    for p, trajectories in zip(order, results):
        for i, traj in zip(sorted(set(picks[p])), trajectories):
            by_index[p * n_per_pair + i] = traj

    result = TrajectorySet(
        selected=[by_index[i] for i in selected_idx.tolist()],
        held_out=[by_index[i] for i in held_idx.tolist()],
    )
    logger.info(
        f"drew {len(result.selected)} of {population} trajectories from {len(usable)} pairs, "
        f"{len(result.held_out)} held out"
    )
    return result


def build_pair_trajectories(
    X: AllocationTensor,
    colistening: CoListeningTable,
    candidates: Iterable[CandidatePair],
    per_pair: int = constants.DEFAULT_EMBED_PER_PAIR,
    seed: int = 0,
    n_jobs: int = 1,
) -> List[RankTrajectory]:
    """
    ``per_pair`` rank trajectories for every candidate pair with a feature-window listen,
    pairs sorted, each pair's draws in stream order. These feed the pair embeddings.
    """
    if per_pair <= 0:
        raise UsageError("per_pair must be positive")
    sampler = TrajectorySampler(X, colistening, seed)
    pairs = sorted(candidates)
    usable = [p for p in pairs if not sampler.is_empty(p)]
    logger.counted_warning(len(pairs) - len(usable), "candidate pairs without any feature-window listen not embedded")
    results = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_pair_trajectories)(sampler, pair, per_pair, list(range(per_pair))) for pair in usable
    )
    trajectories = [t for group in results for t in group]
    logger.info(f"sampled {per_pair} trajectories for each of {len(usable)} pairs")
    return trajectories
