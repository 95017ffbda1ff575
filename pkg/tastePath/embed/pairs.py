from collections import OrderedDict
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd

from tastePath.core.exceptions import EmptyInputError, UnknownEntityError
from tastePath.embed.greedy import GreedyEmbedder
from tastePath.logger import get_logger
from tastePath.models.allocation import CandidatePair
from tastePath.models.pathlet import CodeModel, Pathlet, PathletDictionary
from tastePath.models.trajectory import RankTrajectory

logger = get_logger("tastePath.embed")


def embed_pair(
    pair: CandidatePair,
    trajectories: Sequence[RankTrajectory],
    dictionary: PathletDictionary,
    embedder: Optional[GreedyEmbedder] = None,
) -> np.ndarray:
    """Mean embedding of the pair's trajectories"""
    if not trajectories:
        raise EmptyInputError(f"no trajectory for pair ({pair.user}, {pair.genre})")
    embedder = embedder or GreedyEmbedder(dictionary)
    coords = np.stack([embedder.embed(t).coords for t in trajectories]).astype(np.float64)
    return coords.mean(axis=0)


def group_by_pair(trajectories: Iterable[RankTrajectory]) -> Dict[CandidatePair, List[RankTrajectory]]:
    groups: Dict[CandidatePair, List[RankTrajectory]] = OrderedDict()
    for traj in trajectories:
        groups.setdefault(traj.anchor, []).append(traj)
    return groups


def embed_pairs(
    trajectories: Iterable[RankTrajectory], dictionary: PathletDictionary, per_pair: Optional[int] = None
) -> Dict[CandidatePair, np.ndarray]:
    """Mean embedding per anchor pair over its first ``per_pair`` trajectories, pairs sorted"""
    embedder = GreedyEmbedder(dictionary)
    groups = group_by_pair(trajectories)
    result = {}
    for pair in sorted(groups):
        group = groups[pair] if per_pair is None else groups[pair][:per_pair]
        result[pair] = embed_pair(pair, group, dictionary, embedder)
    logger.info(f"embedded {len(result)} pairs over {len(dictionary)} pathlets")
    return result


def reduced_code_embedding(model: CodeModel, dictionary: PathletDictionary, candidates: Sequence[Pathlet]) -> np.ndarray:
    """Rows of alpha for the selected pathlets, |dictionary| x |P|"""
    position = {p.ranks: i for i, p in enumerate(candidates)}
    try:
        rows = [position[p.ranks] for p in dictionary.pathlets]
    except KeyError as e:
        raise UnknownEntityError(f"dictionary pathlet {e.args[0]} is not a candidate") from None
    return model.alpha[rows]


def embedding_frame(embeddings: Dict[CandidatePair, np.ndarray], dictionary: PathletDictionary) -> pd.DataFrame:
    """One row per pair, one column per pathlet labelled by its ranks"""
    labels = dictionary.labels()
    pairs = list(embeddings)
    frame = pd.DataFrame(
        np.stack([embeddings[p] for p in pairs]) if pairs else np.zeros((0, len(labels))),
        columns=labels,
    )
    frame.insert(0, "kind", [p.kind.value for p in pairs])
    frame.insert(0, "genre", [p.genre for p in pairs])
    frame.insert(0, "user", [p.user for p in pairs])
    return frame
