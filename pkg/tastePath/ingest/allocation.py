from typing import List, Optional

import numpy as np
import pandas as pd

from tastePath.logger import get_logger
from tastePath.models.allocation import AllocationTensor, CoListeningTable, CoListeningVector
from tastePath.models.events import History, SlicedHistory

logger = get_logger("tastePath.ingest")


def _codes(sliced: SlicedHistory, users: List[str], genres: List[str]):
    frame = sliced.log.frame
    u = pd.Categorical(frame["user"], categories=users).codes.astype(np.int64)
    g = pd.Categorical(frame["genre"], categories=genres).codes.astype(np.int64)
    return u, g


def allocation(sliced: SlicedHistory) -> AllocationTensor:
    """X^k_{u,g} = events of genre g in h^k_u / |h^k_u|; empty windows give all-zero rows"""
    users = sliced.log.users
    genres = sliced.log.genres
    K, U, G = sliced.K, len(users), len(genres)
    u, g = _codes(sliced, users, genres)

    flat = (sliced.windows * U + u) * G + g
    counts = np.bincount(flat, minlength=K * U * G).reshape(K, U, G).astype(np.int64)
    totals = counts.sum(axis=2, keepdims=True)
    with np.errstate(invalid="ignore", divide="ignore"):
        values = np.where(totals > 0, counts / np.maximum(totals, 1), 0.0)

    empty = int((totals[..., 0] == 0).sum())
    logger.debug(f"allocation tensor {K}x{U}x{G}, {empty} empty user-windows")
    return AllocationTensor(values=values, users=users, genres=genres, counts=counts)


def colistening(window: History, genre: str, genres: Optional[List[str]] = None) -> CoListeningVector:
    """
    For each event of ``genre`` at position j of the window, count the genres at j-1
    and j+1 when those positions exist. Self-adjacency is counted.
    """
    sequence = window.genres
    if genres is None:
        genres = sorted(set(sequence) | {genre})
    pos = {g: i for i, g in enumerate(genres)}
    counts = np.zeros(len(genres), dtype=np.int64)
    for j, current in enumerate(sequence):
        if current != genre:
            continue
        if j > 0:
            counts[pos[sequence[j - 1]]] += 1
        if j + 1 < len(sequence):
            counts[pos[sequence[j + 1]]] += 1
    return CoListeningVector(genre=genre, counts=counts, genres=list(genres))


def colistening_table(sliced: SlicedHistory, tensor: AllocationTensor) -> CoListeningTable:
    """Vectorized co-listening counts for every (window, user, genre), indexed like ``tensor``"""
    U, G = tensor.n_users, tensor.n_genres
    table = CoListeningTable(n_genres=G)
    if len(sliced.log) < 2:
        return table

    u, g = _codes(sliced, tensor.users, tensor.genres)
    k = sliced.windows
    # frame is sorted by user then time, so same-user same-window neighbours are adjacent rows
    same = (u[1:] == u[:-1]) & (k[1:] == k[:-1])
    left = np.nonzero(same)[0]
    right = left + 1
    win = np.concatenate([k[left], k[right]])
    usr = np.concatenate([u[left], u[right]])
    center = np.concatenate([g[left], g[right]])
    neighbor = np.concatenate([g[right], g[left]])

    keys = ((win * U + usr) * G + center) * G + neighbor
    unique, counts = np.unique(keys, return_counts=True)
    neighbors = unique % G
    groups = unique // G
    starts = np.flatnonzero(np.r_[True, groups[1:] != groups[:-1]])
    ends = np.r_[starts[1:], len(groups)]
    for s, e in zip(starts.tolist(), ends.tolist()):
        group = int(groups[s])
        gg = group % G
        uu = (group // G) % U
        kk = group // (G * U)
        table.entries[(kk, uu, gg)] = (neighbors[s:e].copy(), counts[s:e].astype(np.int64))
    logger.debug(f"co-listening table with {len(table)} (window, user, genre) entries")
    return table


def truncate(tensor: AllocationTensor, n_windows: int) -> AllocationTensor:
    return tensor.truncate(n_windows)
