from typing import List, Sequence

import numpy as np

from tastePath.core.exceptions import ShapeError
from tastePath.models.pathlet import Pathlet, PathletDictionary


def select_topn(alpha: np.ndarray, candidates: Sequence[Pathlet], top_n: int) -> PathletDictionary:
    """
    The ``top_n`` candidates with the largest total code mass (row sums of alpha), ties
    broken by higher support, then shorter length, then rank sequence.
    """
    if alpha.shape[0] != len(candidates):
        raise ShapeError(f"alpha has {alpha.shape[0]} rows for {len(candidates)} candidates")
    influence = alpha.sum(axis=1)
    order: List[int] = sorted(
        range(len(candidates)),
        key=lambda i: (-influence[i], -candidates[i].support, len(candidates[i]), candidates[i].ranks),
    )[:top_n]
    return PathletDictionary(
        pathlets=[candidates[i] for i in order],
        influence=[float(influence[i]) for i in order],
    )
