import numpy as np

from tastePath import constants
from tastePath.core.exceptions import EmptyInputError, NumericalError
from tastePath.dict_learn.objective import Matrix, PrecomputedObjective, check_shapes
from tastePath.logger import get_logger
from tastePath.models.pathlet import CodeModel, LearnConfig

logger = get_logger("tastePath.dict_learn")

BETA1 = 0.9
BETA2 = 0.999
EPSILON = 1e-8


def init_alpha(n_candidates: int, n_paths: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.uniform(0.0, constants.DEFAULT_ALPHA_INIT_HIGH, size=(n_candidates, n_paths))


def fit(P_mat: Matrix, D0_mat: Matrix, cfg: LearnConfig = LearnConfig()) -> CodeModel:
    """
    Minimize 1/2 ||P - D0 alpha||_F^2 + lambda ||alpha||_1 over alpha in [0, 1] with
    full-batch Adam, clipping alpha into the box after every step.

    Stops after ``max_epochs`` or after ``patience`` consecutive epochs that fail to
    lower the best loss so far by a relative ``stagnation_tol``. The lowest-loss
    iterate, the initial point included, is returned.

    Raises:
        EmptyInputError: no trajectory or no candidate
        NumericalError: the loss became non-finite
    """
    n_candidates, n_paths = D0_mat.shape[1], P_mat.shape[1]
    if n_candidates == 0 or n_paths == 0:
        raise EmptyInputError("fit needs at least one trajectory and one candidate")

    alpha = init_alpha(n_candidates, n_paths, cfg.seed)
    check_shapes(P_mat, D0_mat, alpha)
    objective = PrecomputedObjective(P_mat, D0_mat)

    m = np.zeros_like(alpha)
    v = np.zeros_like(alpha)
    current, grad = objective(alpha, cfg.lambda_)
    if not np.isfinite(current):
        raise NumericalError("initial loss is not finite", epoch=0)
    initial = current
    best_loss, best_alpha, best_epoch = current, alpha.copy(), 0

    history = []
    stalled = 0
    stop_reason = "max_epochs"
    for epoch in range(1, cfg.max_epochs + 1):
        m = BETA1 * m + (1 - BETA1) * grad
        v = BETA2 * v + (1 - BETA2) * grad * grad
        m_hat = m / (1 - BETA1**epoch)
        v_hat = v / (1 - BETA2**epoch)
        alpha = np.clip(alpha - cfg.learning_rate * m_hat / (np.sqrt(v_hat) + EPSILON), 0.0, 1.0)

        current, grad = objective(alpha, cfg.lambda_)
        if not np.isfinite(current):
            raise NumericalError("loss is not finite", epoch=epoch)
        history.append(current)
        logger.debug(f"epoch {epoch}: loss {current:.6g}")

        improvement = (best_loss - current) / max(abs(best_loss), np.finfo(float).tiny)
        stalled = 0 if improvement >= cfg.stagnation_tol else stalled + 1
        if current < best_loss:
            best_loss, best_alpha, best_epoch = current, alpha.copy(), epoch
        if stalled >= cfg.patience:
            stop_reason = "stagnation"
            break

    logger.info(
        f"fit stopped by {stop_reason} after {len(history)} epochs: "
        f"loss {initial:.6g} -> {best_loss:.6g} (best at epoch {best_epoch})"
    )
    return CodeModel(
        alpha=best_alpha,
        loss_history=history,
        initial_loss=initial,
        best_epoch=best_epoch,
        stop_reason=stop_reason,
    )
