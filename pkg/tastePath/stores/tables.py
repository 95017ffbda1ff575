"""CSV and JSON persistence of the tabular pipeline artifacts"""
from pathlib import Path
from typing import Dict, List, Sequence

import numpy as np
import pandas as pd

from tastePath.constants import CandidateKind
from tastePath.models.allocation import AllocationTensor, CandidatePair, CandidateSets, CoListeningTable
from tastePath.models.prediction import PredictionMatrix
from tastePath.stores.base import PathLike, atomic_path, read_json, write_json
from tastePath.stores.exceptions import ArtifactError

FLOAT_FORMAT = "%.10g"


def write_frame(path: PathLike, frame: pd.DataFrame) -> None:
    with atomic_path(path) as tmp:
        frame.to_csv(tmp, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def read_frame(path: PathLike, **kwargs) -> pd.DataFrame:
    path = Path(path)
    if not path.exists():
        raise ArtifactError(f"{path} does not exist")
    return pd.read_csv(path, keep_default_na=False, **kwargs)


def save_tensor(counts_path: PathLike, index_path: PathLike, X: AllocationTensor, extra: Dict = None) -> None:
    """Nonzero event counts in long form plus the user and genre index"""
    counts = X.counts if X.counts is not None else X.values
    k, u, g = np.nonzero(counts)
    frame = pd.DataFrame(
        {
            "window": k,
            "user": [X.users[i] for i in u],
            "genre": [X.genres[i] for i in g],
            "count": counts[k, u, g],
        }
    )
    write_frame(counts_path, frame)
    write_json(index_path, {"K": X.K, "users": X.users, "genres": X.genres, "raw_counts": X.counts is not None, **(extra or {})})


def load_tensor(counts_path: PathLike, index_path: PathLike) -> AllocationTensor:
    index = read_json(index_path)
    users, genres = index["users"], index["genres"]
    frame = read_frame(counts_path, dtype={"user": str, "genre": str})
    shape = (int(index["K"]), len(users), len(genres))
    counts = np.zeros(shape, dtype=np.int64 if index.get("raw_counts", True) else np.float64)
    if len(frame):
        u = pd.Categorical(frame["user"], categories=users).codes
        g = pd.Categorical(frame["genre"], categories=genres).codes
        if (u < 0).any() or (g < 0).any():
            raise ArtifactError(f"{counts_path} references users or genres missing from {index_path}")
        counts[frame["window"].to_numpy(), u, g] = frame["count"].to_numpy()
    totals = counts.sum(axis=2, keepdims=True)
    with np.errstate(invalid="ignore", divide="ignore"):
        values = np.where(totals > 0, counts / np.where(totals > 0, totals, 1), 0.0)
    raw = counts if index.get("raw_counts", True) else None
    return AllocationTensor(values=values, users=users, genres=genres, counts=raw)


def save_colistening(path: PathLike, table: CoListeningTable, X: AllocationTensor) -> None:
    rows = [(k, X.users[u], X.genres[g], X.genres[n], c) for k, u, g, n, c in table.rows()]
    write_frame(path, pd.DataFrame(rows, columns=["window", "user", "genre", "neighbor", "count"]))


def load_colistening(path: PathLike, X: AllocationTensor) -> CoListeningTable:
    frame = read_frame(path, dtype={"user": str, "genre": str, "neighbor": str})
    table = CoListeningTable(n_genres=X.n_genres)
    if not len(frame):
        return table
    frame = frame.assign(
        u=[X.user_row(u) for u in frame["user"]],
        g=[X.genre_col(g) for g in frame["genre"]],
        n=[X.genre_col(n) for n in frame["neighbor"]],
    )
    for (k, u, g), rows in frame.groupby(["window", "u", "g"], sort=True):
        table.entries[(int(k), int(u), int(g))] = (
            rows["n"].to_numpy(dtype=np.int64),
            rows["count"].to_numpy(dtype=np.int64),
        )
    return table


def save_candidates(path: PathLike, sets: CandidateSets) -> None:
    pairs = sets.of(CandidateKind.APPEARANCE) + sets.of(CandidateKind.DISAPPEARANCE)
    frame = pd.DataFrame(
        [(p.user, p.genre, p.kind.value) for p in pairs], columns=["user", "genre", "kind"]
    )
    write_frame(path, frame)


def load_candidates(path: PathLike) -> CandidateSets:
    frame = read_frame(path, dtype=str)
    sets = CandidateSets()
    for user, genre, kind in frame[["user", "genre", "kind"]].itertuples(index=False):
        pair = CandidatePair(user, genre, CandidateKind.parse(kind))
        (sets.appearance if pair.kind == CandidateKind.APPEARANCE else sets.disappearance).add(pair)
    return sets


def load_embeddings(path: PathLike) -> Dict[CandidatePair, np.ndarray]:
    frame = read_frame(path, dtype={"user": str, "genre": str, "kind": str})
    coords = frame.drop(columns=["user", "genre", "kind"]).to_numpy(dtype=np.float64)
    return {
        CandidatePair(u, g, CandidateKind.parse(k)): coords[i]
        for i, (u, g, k) in enumerate(frame[["user", "genre", "kind"]].itertuples(index=False))
    }


def save_prediction(path: PathLike, prediction: PredictionMatrix) -> None:
    frame = pd.DataFrame(prediction.values, columns=prediction.genres)
    frame.insert(0, "excluded", prediction.excluded.astype(int))
    frame.insert(0, "user", prediction.users)
    write_frame(path, frame)


def load_prediction(path: PathLike, name: str) -> PredictionMatrix:
    frame = read_frame(path, dtype={"user": str})
    genres: List[str] = [c for c in frame.columns if c not in ("user", "excluded")]
    return PredictionMatrix(
        name=name,
        values=frame[genres].to_numpy(dtype=np.float64),
        users=frame["user"].tolist(),
        genres=genres,
        excluded=frame["excluded"].to_numpy().astype(bool),
    )


def save_loss_history(path: PathLike, initial: float, history: Sequence[float]) -> None:
    losses = [initial] + list(history)
    write_frame(path, pd.DataFrame({"epoch": range(len(losses)), "loss": losses}))
