from typing import Dict, List, Mapping, Sequence

import numpy as np
import pandas as pd

from tastePath.constants import CandidateKind
from tastePath.core.exceptions import EmptyInputError, ShapeError
from tastePath.logger import get_logger
from tastePath.models.allocation import CandidatePair
from tastePath.models.metrics import PathletAnalysis, PathletProfile
from tastePath.models.pathlet import Pathlet, PathletDictionary

logger = get_logger("tastePath.evaluate")


def diversity(ranks: Sequence[int]) -> float:
    """Share of distinct ranks in the pathlet"""
    return len(set(ranks)) / len(ranks)


def profile_of(pathlet: Pathlet) -> PathletProfile:
    ranks = pathlet.ranks
    return PathletProfile(
        ranks=ranks,
        inertial=0 in ranks,
        mean_rank=float(np.mean(ranks)),
        diversity=diversity(ranks),
    )


def pathlet_profile(dictionary: PathletDictionary) -> List[PathletProfile]:
    if not len(dictionary):
        raise EmptyInputError("cannot profile an empty dictionary")
    return [profile_of(p) for p in dictionary]


def pathlet_correlation(features: np.ndarray, labels: Sequence[int]) -> np.ndarray:
    """
    Pearson correlation of every embedding coordinate with the binary outcome. A
    coordinate without variance correlates 0, and so does everything when the labels
    hold a single class.
    """
    features = np.asarray(features, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.float64)
    if features.ndim != 2 or features.shape[0] != len(labels):
        raise ShapeError(f"features {features.shape} do not match {len(labels)} labels")
    if len(labels) < 2:
        raise EmptyInputError("correlation needs at least two pairs")
    y = labels - labels.mean()
    if not np.any(y):
        logger.warning("labels hold a single class; all correlations set to 0")
        return np.zeros(features.shape[1])
    centered = features - features.mean(axis=0)
    spread = np.sqrt((centered**2).sum(axis=0)) * np.sqrt((y**2).sum())
    with np.errstate(divide="ignore", invalid="ignore"):
        corr = np.where(spread > 0, centered.T @ y / spread, 0.0)
    return np.clip(corr, -1.0, 1.0)


def analyze_pathlets(
    dictionary: PathletDictionary, corr_appearance: np.ndarray, corr_disappearance: np.ndarray
) -> List[PathletAnalysis]:
    profiles = pathlet_profile(dictionary)
    if not len(profiles) == len(corr_appearance) == len(corr_disappearance):
        raise ShapeError("one correlation per pathlet expected for both outcomes")
    return [
        PathletAnalysis(profile=p, corr_appearance=float(a), corr_disappearance=float(d))
        for p, a, d in zip(profiles, corr_appearance, corr_disappearance)
    ]


def analysis_frame(analyses: Sequence[PathletAnalysis]) -> pd.DataFrame:
    return pd.DataFrame([a.to_dict() for a in analyses])


def diversity_by_popularity(
    dictionary: PathletDictionary,
    embeddings: Mapping[CandidatePair, np.ndarray],
    correlations: np.ndarray,
    popularity: Mapping[str, float],
    kind: CandidateKind = CandidateKind.APPEARANCE,
    buckets: int = 5,
) -> pd.DataFrame:
    """
    Per anchor genre, the usage-weighted mean diversity of the positively correlated
    pathlets in its pairs' embeddings, with the genre's popularity and its quantile bucket.
    """
    positive = np.asarray(correlations) > 0
    diversities = np.array([diversity(p.ranks) for p in dictionary])
    usage: Dict[str, np.ndarray] = {}
    for pair, coords in embeddings.items():
        if pair.kind != kind:
            continue
        usage.setdefault(pair.genre, np.zeros(len(dictionary)))
        usage[pair.genre] += np.where(positive, coords, 0.0)

    rows = []
    for genre in sorted(usage):
        weights = usage[genre]
        if weights.sum() <= 0:
            continue
        rows.append(
            {
                "genre": genre,
                "popularity": float(popularity.get(genre, 0.0)),
                "diversity": float(weights @ diversities / weights.sum()),
                "usage": float(weights.sum()),
            }
        )
    frame = pd.DataFrame(rows, columns=["genre", "popularity", "diversity", "usage"])
    if frame.empty:
        frame["bucket"] = pd.Series(dtype=int)
        return frame
    frame["bucket"] = pd.qcut(frame["popularity"].rank(method="first"), q=min(buckets, len(frame)), labels=False)
    return frame
