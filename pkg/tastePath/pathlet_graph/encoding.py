from typing import Iterable, List, Sequence

import numpy as np
import scipy.sparse as sp

from tastePath.core.exceptions import DataError
from tastePath.models.pathlet import EdgeEncoding, Pathlet, TrajectoryGraph


def incidence_matrix(paths: Iterable[Sequence[int]], graph: TrajectoryGraph, what: str = "path") -> sp.csc_matrix:
    """Binary |E| x n matrix, column j flags the distinct edges walked by path j"""
    rows: List[int] = []
    cols: List[int] = []
    n = 0
    for j, ranks in enumerate(paths):
        n += 1
        seen = set()
        for edge in zip(ranks[:-1], ranks[1:]):
            idx = graph.edge_index.get(edge)
            if idx is None:
                raise DataError(f"{what} {j} walks edge {edge}, which is not in the trajectory graph")
            if idx not in seen:
                seen.add(idx)
                rows.append(idx)
                cols.append(j)
    data = np.ones(len(rows), dtype=np.float64)
    return sp.csc_matrix((data, (rows, cols)), shape=(graph.n_edges, n))


def encode(
    trajectories: Iterable[Sequence[int]], candidates: Sequence[Pathlet], graph: TrajectoryGraph
) -> EdgeEncoding:
    """
    One-hot edge encodings of trajectories (P) and candidate pathlets (D0).

    Raises:
        DataError: a trajectory or candidate uses an edge absent from ``graph``
    """
    P_mat = incidence_matrix([tuple(t) for t in trajectories], graph, "trajectory")
    D0_mat = incidence_matrix([p.ranks for p in candidates], graph, "candidate")
    return EdgeEncoding(P_mat=P_mat, D0_mat=D0_mat)
