import numpy as np

from tastePath.constants import CandidateKind
from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor, CandidatePair, CandidateSets

logger = get_logger("tastePath.ingest")


def candidate_sets(X: AllocationTensor) -> CandidateSets:
    """
    A+ = {(u, g): X^prev = 0 and some earlier window > 0}, A- = {(u, g): X^prev > 0},
    with X^prev the penultimate window. The last window is never read.
    """
    prev = X.prev
    if X.K > 2:
        seen_before = (X.values[: X.K - 2] > 0).any(axis=0)
    else:
        seen_before = np.zeros_like(prev, dtype=bool)

    sets = CandidateSets()
    for u, g in zip(*np.nonzero((prev == 0) & seen_before)):
        sets.appearance.add(CandidatePair(X.users[u], X.genres[g], CandidateKind.APPEARANCE))
    for u, g in zip(*np.nonzero(prev > 0)):
        sets.disappearance.add(CandidatePair(X.users[u], X.genres[g], CandidateKind.DISAPPEARANCE))
    logger.info(f"candidates: {len(sets.appearance)} in A+, {len(sets.disappearance)} in A-")
    return sets
