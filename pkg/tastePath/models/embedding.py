from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

# (first node, last node, dictionary position); node indices inclusive
Span = Tuple[int, int, int]


@dataclass
class TrajectoryEmbedding:
    """Pathlet usage counts of one trajectory under greedy longest matching"""

    coords: np.ndarray
    matched_spans: List[Span] = field(default_factory=list)
    uncovered_edges: int = 0

    @property
    def covered_edges(self) -> int:
        return sum(end - start for start, end, _ in self.matched_spans)

    @property
    def n_edges(self) -> int:
        return self.covered_edges + self.uncovered_edges

    @property
    def n_nonzero(self) -> int:
        return int(np.count_nonzero(self.coords))
