from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from tastePath.constants import CandidateKind
from tastePath.core.exceptions import EmptyInputError
from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor, CandidatePair
from tastePath.models.prediction import LabeledPair

logger = get_logger("tastePath.predict")


def label_of(X: AllocationTensor, pair: CandidatePair, target_window: int) -> int:
    """Appearance: 1 iff the genre is heard in the target window; disappearance: 1 iff it is not"""
    value = X.values[target_window, X.user_row(pair.user), X.genre_col(pair.genre)]
    if pair.kind == CandidateKind.APPEARANCE:
        return int(value > 0)
    return int(value == 0)


def label_pairs(
    X: AllocationTensor,
    pairs: Iterable[CandidatePair],
    embeddings: Dict[CandidatePair, np.ndarray],
    target_window: Optional[int] = None,
) -> List[LabeledPair]:
    """Labelled feature rows for the pairs that have an embedding; target defaults to the last window"""
    target = X.K - 1 if target_window is None else target_window
    labelled, missing = [], 0
    for pair in sorted(pairs):
        features = embeddings.get(pair)
        if features is None:
            missing += 1
            continue
        labelled.append(LabeledPair(pair=pair, features=features, label=label_of(X, pair, target)))
    logger.counted_warning(missing, "candidate pairs without an embedding left out of labelling")
    return labelled


def as_arrays(data: List[LabeledPair]) -> Tuple[np.ndarray, np.ndarray]:
    if not data:
        raise EmptyInputError("no labelled pairs")
    features = np.stack([d.features for d in data]).astype(np.float64)
    labels = np.asarray([d.label for d in data], dtype=np.int64)
    return features, labels


def historical_mean(X: AllocationTensor, user: str, genre: str) -> float:
    """Mean allocation of the genre over the feature windows where it is nonzero, 0 when never heard"""
    history = X.values[: X.K - 1, X.user_row(user), X.genre_col(genre)]
    heard = history[history > 0]
    return float(heard.mean()) if len(heard) else 0.0
