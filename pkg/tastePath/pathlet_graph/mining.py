from collections import Counter
from typing import Iterable, List, Sequence, Tuple

from tastePath import constants
from tastePath.core.exceptions import UsageError
from tastePath.logger import get_logger
from tastePath.models.pathlet import Pathlet

logger = get_logger("tastePath.pathlet_graph")


def count_subsequences(trajectories: Iterable[Sequence[int]], l_max: int) -> Counter:
    """Occurrences of every contiguous subsequence of 2..l_max nodes, repeats included"""
    counts: Counter = Counter()
    for ranks in trajectories:
        ranks = tuple(ranks)
        for length in range(2, min(l_max, len(ranks)) + 1):
            counts.update(ranks[i : i + length] for i in range(len(ranks) - length + 1))
    return counts


def candidate_order(item: Tuple[Tuple[int, ...], int]):
    ranks, support = item
    return -support, len(ranks), ranks


def mine_candidates(
    trajectories: Iterable[Sequence[int]],
    l_max: int = constants.DEFAULT_L_MAX,
    top_m: int = constants.DEFAULT_TOP_M,
) -> List[Pathlet]:
    """
    The ``top_m`` most frequent contiguous sub-paths with 2..l_max nodes, ordered by
    support, then shorter length, then rank sequence.

    Raises:
        UsageError: top_m or l_max out of range
    """
    if top_m <= 0:
        raise UsageError("top_m must be positive")
    if l_max < 2:
        raise UsageError("l_max must allow at least two nodes")
    counts = count_subsequences(trajectories, l_max)
    ranked = sorted(counts.items(), key=candidate_order)[:top_m]
    logger.info(f"mined {len(counts)} distinct sub-paths, kept {len(ranked)}")
    return [Pathlet(ranks=ranks, support=support) for ranks, support in ranked]
