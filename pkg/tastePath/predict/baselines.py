import numpy as np

from tastePath.constants import ModelName
from tastePath.core.exceptions import EmptyInputError
from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor
from tastePath.models.prediction import NMFConfig, PredictionMatrix
from tastePath.predict.nmf import nmf

logger = get_logger("tastePath.predict")


def normalize_rows(values: np.ndarray) -> np.ndarray:
    sums = values.sum(axis=1, keepdims=True)
    return np.where(sums > 0, values / np.where(sums > 0, sums, 1.0), 0.0)


def baseline_previous(X: AllocationTensor) -> PredictionMatrix:
    """The penultimate window repeated; users inactive there are excluded"""
    prediction = PredictionMatrix(
        name=ModelName.PREVIOUS.value, values=X.prev.copy(), users=list(X.users), genres=list(X.genres)
    )
    logger.counted_warning(prediction.n_excluded, "users without listens in the penultimate window excluded")
    return prediction


def popularity_distribution(X: AllocationTensor) -> np.ndarray:
    """Genre event frequencies pooled over every user and feature window"""
    pooled = X.pooled_counts(range(X.K - 1)).sum(axis=0)
    total = pooled.sum()
    if total <= 0:
        raise EmptyInputError("no listens in the feature windows")
    return pooled / total


def baseline_popularity(X: AllocationTensor) -> PredictionMatrix:
    distribution = popularity_distribution(X)
    values = np.tile(distribution, (X.n_users, 1))
    return PredictionMatrix(
        name=ModelName.POPULARITY.value, values=values, users=list(X.users), genres=list(X.genres)
    )


def baseline_nmf(X: AllocationTensor, cfg: NMFConfig = NMFConfig()) -> PredictionMatrix:
    """Row-normalized rank-r reconstruction of the mean feature-window allocation"""
    M = X.values[: X.K - 1].mean(axis=0)
    result = nmf(M, cfg)
    values = normalize_rows(np.clip(result.reconstruction(), 0.0, None))
    prediction = PredictionMatrix(
        name=ModelName.NMF.value,
        values=values,
        users=list(X.users),
        genres=list(X.genres),
        flags={"converged": result.converged},
    )
    logger.counted_warning(prediction.n_excluded, "users with an all-zero NMF reconstruction excluded")
    return prediction
