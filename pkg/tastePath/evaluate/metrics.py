from typing import Iterable, List, Optional, Sequence

import numpy as np
from sklearn.metrics import roc_auc_score

from tastePath.constants import ModelName
from tastePath.core.exceptions import EmptyInputError, ShapeError
from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor, CandidatePair, CandidateSets
from tastePath.models.metrics import MetricsReport
from tastePath.models.prediction import PredictionMatrix

logger = get_logger("tastePath.evaluate")


def _check_same_shape(*arrays: np.ndarray) -> None:
    shapes = {a.shape for a in arrays}
    if len(shapes) > 1:
        raise ShapeError(f"shape mismatch: {sorted(shapes)}")


def atv(Y: np.ndarray, Y_hat: np.ndarray) -> float:
    """
    Average total variation (1/n) sum_u 1/2 sum_g |Y - Y_hat| over the given rows.

    Raises:
        EmptyInputError: no row to evaluate
    """
    Y, Y_hat = np.atleast_2d(Y), np.atleast_2d(Y_hat)
    _check_same_shape(Y, Y_hat)
    if Y.shape[0] == 0:
        raise EmptyInputError("ATV over zero users")
    return float(np.mean(0.5 * np.abs(Y - Y_hat).sum(axis=1)))


def auc(scores: Sequence[float], labels: Sequence[int]) -> Optional[float]:
    """Probability a random positive outranks a random negative, ties count 1/2; None on one class"""
    labels = np.asarray(labels, dtype=np.int64)
    scores = np.asarray(scores, dtype=np.float64)
    if len(scores) != len(labels):
        raise ShapeError(f"{len(scores)} scores for {len(labels)} labels")
    if len(np.unique(labels)) < 2:
        return None
    return float(roc_auc_score(labels, scores))


def plus_minus_eval(
    Y: np.ndarray,
    Y_hat: np.ndarray,
    X_prev: np.ndarray,
    rows: Optional[np.ndarray] = None,
    changed_only: bool = True,
) -> Optional[float]:
    """
    AUC of the predicted direction of change. Each cell scores Y_hat - X_prev and is
    labelled 1 when the allocation grew. By default only cells that actually changed
    are scored; ``changed_only=False`` scores every cell of the selected rows.
    """
    _check_same_shape(Y, Y_hat, X_prev)
    rows = np.ones(Y.shape[0], dtype=bool) if rows is None else rows
    Y, Y_hat, X_prev = Y[rows], Y_hat[rows], X_prev[rows]
    cells = Y != X_prev if changed_only else np.ones_like(Y, dtype=bool)
    return auc((Y_hat - X_prev)[cells], (Y > X_prev)[cells].astype(int))


def new_classes_eval(
    Y: np.ndarray,
    Y_hat: np.ndarray,
    X: AllocationTensor,
    appearance: Iterable[CandidatePair],
    rows: Optional[np.ndarray] = None,
) -> Optional[float]:
    """AUC of genre emergence over A+ pairs: score Y_hat, label 1 when the genre is heard in Y"""
    _check_same_shape(Y, Y_hat)
    rows = np.ones(Y.shape[0], dtype=bool) if rows is None else rows
    scores, labels = [], []
    for pair in sorted(appearance):
        u, g = X.user_row(pair.user), X.genre_col(pair.genre)
        if not rows[u]:
            continue
        scores.append(Y_hat[u, g])
        labels.append(int(Y[u, g] > 0))
    if not scores:
        logger.warning("no appearance candidate left to evaluate")
        return None
    return auc(scores, labels)


def evaluated_rows(Y: np.ndarray, prediction: PredictionMatrix) -> np.ndarray:
    """Users active in the target window with a non-excluded prediction"""
    return (Y.sum(axis=1) > 0) & ~prediction.excluded


def shifted_previous(X: AllocationTensor) -> Optional[np.ndarray]:
    """The window before the penultimate one, scored in place of Previous; None when K < 3"""
    if X.K < 3:
        return None
    return X.values[X.K - 3]


def evaluate_prediction(
    X: AllocationTensor,
    prediction: PredictionMatrix,
    candidates: CandidateSets,
    changed_only: bool = True,
    shift_previous: bool = True,
) -> MetricsReport:
    """
    Score one model against the last window of the eval-side tensor. Previous scores
    all-zero changes, so its AUCs use the one-window shift and the report is flagged.
    """
    Y, X_prev = X.target, X.prev
    _check_same_shape(Y, prediction.values)
    active = Y.sum(axis=1) > 0
    rows = evaluated_rows(Y, prediction)
    n_excluded = int((active & prediction.excluded).sum())
    logger.counted_warning(n_excluded, f"{prediction.name}: active users excluded from evaluation")

    score_source: Optional[np.ndarray] = prediction.values
    shifted = shift_previous and prediction.name == ModelName.PREVIOUS.value
    if shifted:
        score_source = shifted_previous(X)

    plus_minus = new_classes = None
    if score_source is not None:
        plus_minus = plus_minus_eval(Y, score_source, X_prev, rows, changed_only)
        new_classes = new_classes_eval(Y, score_source, X, candidates.appearance, rows)
    for label, value in (("plus-minus", plus_minus), ("new-classes", new_classes)):
        if value is None:
            logger.warning(f"{prediction.name}: {label} AUC undefined, reported as absent")

    return MetricsReport(
        model=prediction.name,
        atv=atv(Y[rows], prediction.values[rows]),
        plus_minus_auc=plus_minus,
        new_classes_auc=new_classes,
        n_users_evaluated=int(rows.sum()),
        excluded_users=n_excluded,
        shifted=shifted,
    )


def evaluate_models(
    X: AllocationTensor,
    predictions: Sequence[PredictionMatrix],
    candidates: CandidateSets,
    changed_only: bool = True,
    shift_previous: bool = True,
) -> List[MetricsReport]:
    """One report per model, in the given order; oracle runs pass ``shift_previous=False``"""
    reports = [evaluate_prediction(X, p, candidates, changed_only, shift_previous) for p in predictions]
    for r in reports:
        logger.info(
            f"{r.model}: ATV {r.atv:.4f}, plus-minus {r.plus_minus_auc}, new classes {r.new_classes_auc}"
            + (" (shifted)" if r.shifted else "")
        )
    return reports
