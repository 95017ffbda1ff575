from typing import Dict, List, Optional

import numpy as np

from tastePath import constants
from tastePath.constants import CandidateKind, ModelName
from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor, CandidatePair
from tastePath.models.prediction import PredictionMatrix
from tastePath.predict.baselines import normalize_rows, popularity_distribution
from tastePath.predict.classifiers import IClassifier
from tastePath.predict.labels import historical_mean

logger = get_logger("tastePath.predict")


def _firing(
    classifier: IClassifier, embeddings: Dict[CandidatePair, np.ndarray], kind: CandidateKind, threshold: float
) -> List[CandidatePair]:
    pairs = sorted(p for p in embeddings if p.kind == kind)
    if not pairs:
        return []
    scores = classifier.predict_proba(np.stack([embeddings[p] for p in pairs]).astype(np.float64))
    return [p for p, s in zip(pairs, scores) if s > threshold]


def plug_previous(
    X: AllocationTensor,
    appearance_clf: IClassifier,
    disappearance_clf: IClassifier,
    embeddings: Dict[CandidatePair, np.ndarray],
    threshold: float = constants.CLASSIFIER_THRESHOLD,
    popularity: Optional[np.ndarray] = None,
) -> PredictionMatrix:
    """
    Previous, edited by the classifiers: a predicted appearance injects the genre's
    historical mean share, a predicted disappearance zeroes the cell, then rows are
    L1-normalized. A row emptied by disappearance edits gets the popularity
    distribution; rows that were already empty stay excluded.
    """
    values = X.prev.copy()
    was_active = values.sum(axis=1) > 0
    edited = np.zeros(X.n_users, dtype=bool)

    appearing = _firing(appearance_clf, embeddings, CandidateKind.APPEARANCE, threshold)
    for pair in appearing:
        values[X.user_row(pair.user), X.genre_col(pair.genre)] = historical_mean(X, pair.user, pair.genre)
        edited[X.user_row(pair.user)] = True
    disappearing = _firing(disappearance_clf, embeddings, CandidateKind.DISAPPEARANCE, threshold)
    for pair in disappearing:
        values[X.user_row(pair.user), X.genre_col(pair.genre)] = 0.0
        edited[X.user_row(pair.user)] = True

    emptied = was_active & (values.sum(axis=1) <= 0)
    # untouched rows keep their exact Previous values
    values[edited] = normalize_rows(values[edited])
    if emptied.any():
        values[emptied] = popularity_distribution(X) if popularity is None else popularity
    logger.info(
        f"plug-previous: {len(appearing)} appearances, {len(disappearing)} disappearances, "
        f"{int(emptied.sum())} rows fell back to popularity"
    )
    prediction = PredictionMatrix(
        name=ModelName.PLUG_PREVIOUS.value, values=values, users=list(X.users), genres=list(X.genres)
    )
    logger.counted_warning(prediction.n_excluded, "users without listens in the penultimate window excluded")
    return prediction
