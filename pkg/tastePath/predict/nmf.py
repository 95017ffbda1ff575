import numpy as np

from tastePath.core.exceptions import NumericalError, UsageError
from tastePath.logger import get_logger
from tastePath.models.prediction import NMFConfig, NMFResult

logger = get_logger("tastePath.predict")

_EPS = 1e-12


def nmf(M: np.ndarray, cfg: NMFConfig = NMFConfig()) -> NMFResult:
    """
    Non-negative factorization M ~ W H with Frobenius multiplicative updates.

    Stops when the relative objective decrease drops below ``cfg.tol``; when ``cfg.iters``
    runs out first the current factors are returned with ``converged=False``.
    """
    if cfg.rank < 1:
        raise UsageError("NMF rank must be >= 1")
    if (M < 0).any():
        raise UsageError("NMF input must be non-negative")
    n, m = M.shape
    rng = np.random.default_rng(cfg.seed)
    scale = np.sqrt(max(M.mean(), _EPS) / cfg.rank)
    W = rng.uniform(0.0, 1.0, size=(n, cfg.rank)) * scale + _EPS
    H = rng.uniform(0.0, 1.0, size=(cfg.rank, m)) * scale + _EPS

    objective = [_objective(M, W, H)]
    converged = False
    for it in range(1, cfg.iters + 1):
        H *= (W.T @ M) / (W.T @ W @ H + _EPS)
        W *= (M @ H.T) / (W @ (H @ H.T) + _EPS)
        value = _objective(M, W, H)
        if not np.isfinite(value):
            raise NumericalError("NMF objective is not finite", epoch=it)
        previous = objective[-1]
        objective.append(value)
        if previous - value <= cfg.tol * max(previous, _EPS):
            converged = True
            break

    if not converged:
        logger.warning(f"NMF did not converge in {cfg.iters} iterations (objective {objective[-1]:.6g})")
    return NMFResult(W=W, H=H, objective=objective, converged=converged)


def _objective(M: np.ndarray, W: np.ndarray, H: np.ndarray) -> float:
    R = M - W @ H
    return float(0.5 * np.sum(R * R))
