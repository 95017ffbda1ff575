from typing import Iterable, Sequence, Union

import numpy as np
import pandas as pd

from tastePath.core.exceptions import EmptyInputError
from tastePath.dict_learn.objective import Matrix
from tastePath.dict_learn.optimizer import fit
from tastePath.dict_learn.selection import select_topn
from tastePath.embed.greedy import GreedyEmbedder
from tastePath.logger import get_logger
from tastePath.models.pathlet import DictionaryMetrics, LearnConfig, Pathlet, PathletDictionary
from tastePath.models.trajectory import RankTrajectory

logger = get_logger("tastePath.dict_learn")

SWEEP_COLUMNS = [
    "lambda",
    "cover_ratio",
    "code_sparsity",
    "mean_pathlets_per_trajectory",
    "final_loss",
    "epochs",
    "stop_reason",
]


def dict_metrics(
    dictionary: PathletDictionary, eval_trajectories: Iterable[Union[RankTrajectory, Sequence[int]]]
) -> DictionaryMetrics:
    """
    cover_ratio: mean share of a trajectory's edges covered by matched pathlets;
    code_sparsity: mean share of zero embedding coordinates;
    mean_pathlets_per_trajectory: mean number of nonzero coordinates.
    Trajectories without edges are skipped.

    Raises:
        EmptyInputError: no evaluation trajectory with at least one edge
    """
    embedder = GreedyEmbedder(dictionary)
    covers, nonzeros = [], []
    skipped = 0
    for traj in eval_trajectories:
        emb = embedder.embed(traj)
        if emb.n_edges == 0:
            skipped += 1
            continue
        covers.append(emb.covered_edges / emb.n_edges)
        nonzeros.append(emb.n_nonzero)
    logger.counted_warning(skipped, "skipped edgeless evaluation trajectories")
    if not covers:
        raise EmptyInputError("dictionary metrics need at least one trajectory with an edge")
    nonzero = np.asarray(nonzeros, dtype=np.float64)
    return DictionaryMetrics(
        cover_ratio=float(np.mean(covers)),
        code_sparsity=float(np.mean(1.0 - nonzero / len(dictionary))),
        mean_pathlets_per_trajectory=float(nonzero.mean()),
        n_trajectories=len(covers),
    )


def sweep(
    P_mat: Matrix,
    D0_mat: Matrix,
    candidates: Sequence[Pathlet],
    eval_trajectories: Sequence[Union[RankTrajectory, Sequence[int]]],
    lambdas: Sequence[float],
    cfg: LearnConfig = LearnConfig(),
) -> pd.DataFrame:
    """Fit, select and score the dictionary for each sparsity weight"""
    rows = []
    for value in lambdas:
        run_cfg = cfg.with_lambda(float(value))
        model = fit(P_mat, D0_mat, run_cfg)
        dictionary = select_topn(model.alpha, candidates, run_cfg.top_n)
        metrics = dict_metrics(dictionary, eval_trajectories)
        logger.info(f"lambda={value:g}: cover {metrics.cover_ratio:.4f}, sparsity {metrics.code_sparsity:.4f}")
        rows.append(
            {
                "lambda": float(value),
                "cover_ratio": metrics.cover_ratio,
                "code_sparsity": metrics.code_sparsity,
                "mean_pathlets_per_trajectory": metrics.mean_pathlets_per_trajectory,
                "final_loss": model.final_loss,
                "epochs": len(model.loss_history),
                "stop_reason": model.stop_reason,
            }
        )
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
