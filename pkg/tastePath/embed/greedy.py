from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from tastePath.core.exceptions import EmptyInputError
from tastePath.models.embedding import Span, TrajectoryEmbedding
from tastePath.models.pathlet import PathletDictionary
from tastePath.models.trajectory import RankTrajectory

Ranks = Union[RankTrajectory, Sequence[int]]


class GreedyEmbedder:
    """
    Longest-match embedding against a fixed dictionary.

    Each active segment is searched for the longest dictionary pathlet it contains;
    among equal lengths the earliest start wins, then the more influential pathlet.
    The match splits the segment into left and right remainders (sharing the matched
    span's end nodes, never its edges), processed left first.
    """

    def __init__(self, dictionary: PathletDictionary):
        if len(dictionary) == 0:
            raise EmptyInputError("cannot embed against an empty dictionary")
        self.dictionary = dictionary
        # length -> ranks -> most influential dictionary position
        self._index: Dict[int, Dict[Tuple[int, ...], int]] = {}
        for pos, pathlet in enumerate(dictionary.pathlets):
            if len(pathlet) < 2:
                continue
            self._index.setdefault(len(pathlet), {}).setdefault(tuple(pathlet.ranks), pos)
        self._lengths = sorted(self._index, reverse=True)

    def _longest_match(self, ranks: Tuple[int, ...], lo: int, hi: int):
        n_nodes = hi - lo + 1
        for length in self._lengths:
            if length > n_nodes:
                continue
            table = self._index[length]
            for start in range(lo, hi - length + 2):
                pos = table.get(ranks[start : start + length])
                if pos is not None:
                    return start, start + length - 1, pos
        return None

    def embed(self, traj: Ranks) -> TrajectoryEmbedding:
        ranks = tuple(traj.ranks if isinstance(traj, RankTrajectory) else traj)
        coords = np.zeros(len(self.dictionary), dtype=np.int64)
        spans: List[Span] = []
        uncovered = 0
        stack = [(0, len(ranks) - 1)] if len(ranks) > 1 else []
        while stack:
            lo, hi = stack.pop()
            if hi <= lo:
                continue
            match = self._longest_match(ranks, lo, hi)
            if match is None:
                uncovered += hi - lo
                continue
            start, end, pos = match
            coords[pos] += 1
            spans.append(match)
            # right pushed first so the left remainder is processed first
            stack.append((end, hi))
            stack.append((lo, start))
        spans.sort()
        return TrajectoryEmbedding(coords=coords, matched_spans=spans, uncovered_edges=uncovered)


def embed_trajectory(traj: Ranks, dictionary: PathletDictionary) -> TrajectoryEmbedding:
    return GreedyEmbedder(dictionary).embed(traj)
