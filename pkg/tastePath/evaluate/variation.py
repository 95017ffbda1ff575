import numpy as np
import pandas as pd

from tastePath.core.exceptions import EmptyInputError, UsageError
from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor

logger = get_logger("tastePath.evaluate")

VARIATION_TYPES = ["appearance", "disappearance", "persistence"]
DECOMPOSITION_COLUMNS = ["window", "user", "tv"] + VARIATION_TYPES
BUCKET_COLUMNS = ["bucket", "tv_low", "tv_high", "tv_mean", "n_users"] + VARIATION_TYPES


def split_variation(before: np.ndarray, after: np.ndarray):
    """
    Total variation between two allocation rows and the share carried by each cell type.
    Returns (tv, shares) with shares None when nothing changed.
    """
    delta = 0.5 * np.abs(after - before)
    tv = float(delta.sum())
    if tv <= 0:
        return tv, None
    masses = {
        "appearance": delta[(before == 0) & (after > 0)].sum(),
        "disappearance": delta[(before > 0) & (after == 0)].sum(),
        "persistence": delta[(before > 0) & (after > 0)].sum(),
    }
    return tv, {name: float(mass / tv) for name, mass in masses.items()}


def variation_decomposition(X: AllocationTensor) -> pd.DataFrame:
    """
    For each pair of consecutive windows and each user active in both, the user's
    intra-variability (total variation) and its split into appearance, disappearance
    and persistence shares.
    """
    if X.K < 2:
        raise UsageError("variation decomposition needs at least two windows")
    rows, skipped = [], 0
    for k in range(X.K - 1):
        before, after = X.values[k], X.values[k + 1]
        active = (before.sum(axis=1) > 0) & (after.sum(axis=1) > 0)
        for u in range(X.n_users):
            if not active[u]:
                continue
            tv, shares = split_variation(before[u], after[u])
            if shares is None:
                skipped += 1
                continue
            rows.append({"window": k, "user": X.users[u], "tv": tv, **shares})
    logger.counted_warning(skipped, "unchanged user rows left out of the decomposition")
    return pd.DataFrame(rows, columns=DECOMPOSITION_COLUMNS)


def decompose_by_intra_variability(decomposition: pd.DataFrame, buckets: int = 10) -> pd.DataFrame:
    """Mean variation shares per quantile bucket of intra-variability"""
    if decomposition.empty:
        raise EmptyInputError("no user row to bucket")
    if buckets < 1:
        raise UsageError("buckets must be >= 1")
    frame = decomposition.copy()
    frame["bucket"] = pd.qcut(frame["tv"], q=buckets, labels=False, duplicates="drop")
    grouped = frame.groupby("bucket", sort=True)
    table = grouped[VARIATION_TYPES].mean()
    table["tv_low"] = grouped["tv"].min()
    table["tv_high"] = grouped["tv"].max()
    table["tv_mean"] = grouped["tv"].mean()
    table["n_users"] = grouped.size()
    return table.reset_index()[BUCKET_COLUMNS]
