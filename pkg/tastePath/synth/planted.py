from typing import Dict, List, Optional, Tuple

import numpy as np

from tastePath.constants import CandidateKind
from tastePath.core.exceptions import UsageError
from tastePath.logger import get_logger
from tastePath.models.allocation import CandidatePair
from tastePath.models.synth import PlantedCorpus, PlantedSpec
from tastePath.models.trajectory import RankMap, RankTrajectory

logger = get_logger("tastePath.synth")

SYNTH_GENRE = "g0"


def synthetic_anchor(index: int) -> CandidatePair:
    return CandidatePair(f"synth{index:06d}", SYNTH_GENRE, CandidateKind.APPEARANCE)


def synthetic_rank_map(alphabet: int) -> RankMap:
    """Identity labelling: rank r is genre 'g{r}'"""
    return RankMap(anchor=SYNTH_GENRE, ranks={f"g{r}": r for r in range(alphabet)})


def check_feasible(spec: PlantedSpec) -> None:
    low, high = spec.pathlet_length_range
    if low > spec.trajectory_length:
        raise UsageError(
            f"shortest planted pathlet ({low} nodes) exceeds the trajectory length {spec.trajectory_length}"
        )
    distinct = sum(spec.rank_alphabet_size**length for length in range(low, high + 1))
    if distinct < spec.n_pathlets:
        raise UsageError(
            f"{spec.n_pathlets} distinct pathlets requested but only {distinct} exist "
            f"over {spec.rank_alphabet_size} ranks with lengths {low}..{high}"
        )


def draw_planted(spec: PlantedSpec, rng: np.random.Generator) -> List[Tuple[int, ...]]:
    low, high = spec.pathlet_length_range
    planted: List[Tuple[int, ...]] = []
    seen = set()
    while len(planted) < spec.n_pathlets:
        length = int(rng.integers(low, high + 1))
        ranks = tuple(int(r) for r in rng.integers(0, spec.rank_alphabet_size, size=length))
        if ranks not in seen:
            seen.add(ranks)
            planted.append(ranks)
    return planted


def plant_trajectory(
    spec: PlantedSpec,
    planted: List[Tuple[int, ...]],
    rng: np.random.Generator,
    counts: Optional[Dict[Tuple[int, ...], int]] = None,
) -> Tuple[int, ...]:
    ranks: List[int] = []
    while len(ranks) < spec.trajectory_length:
        pathlet = planted[int(rng.integers(len(planted)))]
        room = spec.trajectory_length - len(ranks)
        if counts is not None and len(pathlet) <= room:
            counts[pathlet] += 1
        ranks.extend(pathlet[:room])
    sequence = np.asarray(ranks, dtype=np.int64)
    noisy = rng.random(len(sequence)) < spec.noise_prob
    sequence[noisy] = rng.integers(0, spec.rank_alphabet_size, size=int(noisy.sum()))
    return tuple(int(r) for r in sequence)


def generate_planted(spec: PlantedSpec, holdout: int = 0) -> PlantedCorpus:
    """
    Synthetic rank trajectories made by concatenating uniformly drawn planted pathlets
    up to ``trajectory_length`` (the last insertion is cut to fit), then replacing each
    position with a uniform random rank with probability ``noise_prob``.

    ``holdout`` further trajectories are drawn from the same stream after the first
    ``n_trajectories``, so adding a held-out set leaves the training corpus unchanged.
    ``planting_counts`` counts complete insertions into the training corpus only.
    Bit-reproducible per seed.

    Raises:
        UsageError: the length constraints cannot be met
    """
    check_feasible(spec)
    rng = np.random.default_rng(spec.seed)
    planted = draw_planted(spec, rng)
    counts: Dict[Tuple[int, ...], int] = {p: 0 for p in planted}
    rank_map = synthetic_rank_map(spec.rank_alphabet_size)

    trajectories = [
        RankTrajectory(ranks=plant_trajectory(spec, planted, rng, counts), anchor=synthetic_anchor(i), rank_map=rank_map)
        for i in range(spec.n_trajectories)
    ]
    held_out = [
        RankTrajectory(ranks=plant_trajectory(spec, planted, rng), anchor=synthetic_anchor(i), rank_map=rank_map)
        for i in range(spec.n_trajectories, spec.n_trajectories + holdout)
    ]

    logger.info(
        f"planted {len(planted)} pathlets into {len(trajectories)} trajectories and {len(held_out)} held-out "
        f"(length {spec.trajectory_length}, noise {spec.noise_prob})"
    )
    return PlantedCorpus(trajectories=trajectories, planted=planted, planting_counts=counts, held_out=held_out)
