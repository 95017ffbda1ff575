import os
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np
import pytest

from tastePath.constants import CandidateKind
from tastePath.models.allocation import AllocationTensor, CandidatePair
from tastePath.models.trajectory import RankMap, RankTrajectory

# Acceptance runs on the released dataset only when it is available locally
DEEZER_PATH = os.getenv("TASTEPATH_DEEZER_PATH")
requires_deezer = pytest.mark.skipif(
    not DEEZER_PATH or not Path(DEEZER_PATH).exists(),
    reason="TASTEPATH_DEEZER_PATH does not point at the Deezer event log",
)


def write_csv(path: Path, rows: Sequence[Tuple], header: str = "user,ts,genre,track") -> Path:
    lines = [header] + [",".join(str(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def tensor(windows: Sequence[Dict[str, Dict[str, float]]], genres: List[str] = None) -> AllocationTensor:
    """Build a tensor from per-window {user: {genre: share}} dicts"""
    users = sorted({u for w in windows for u in w})
    if genres is None:
        genres = sorted({g for w in windows for row in w.values() for g in row})
    values = np.zeros((len(windows), len(users), len(genres)))
    for k, w in enumerate(windows):
        for u, row in w.items():
            for g, v in row.items():
                values[k, users.index(u), genres.index(g)] = v
    return AllocationTensor(values=values, users=users, genres=genres)


def rank_trajectory(ranks: Sequence[int], user: str = "u", genre: str = "g0") -> RankTrajectory:
    """A rank trajectory whose rank map labels rank r as genre 'g{r}'"""
    pair = CandidatePair(user, genre, CandidateKind.APPEARANCE)
    labels = {f"g{r}": r for r in sorted(set(ranks) | {0})}
    return RankTrajectory(ranks=tuple(ranks), anchor=pair, rank_map=RankMap(anchor=genre, ranks=labels))


def random_corpus(rng: np.random.Generator, n: int, max_len: int = 8, alphabet: int = 5) -> List[Tuple[int, ...]]:
    return [
        tuple(int(x) for x in rng.integers(0, alphabet, size=int(rng.integers(2, max_len + 1))))
        for _ in range(n)
    ]


TOY_GENRES = ["blues", "jazz", "metal", "pop", "rock", "soul"]
TOY_WINDOW = 1000


def write_toy_events(path: Path, n_users: int = 12, K: int = 6, seed: int = 0) -> Path:
    """
    Events over [0, K * TOY_WINDOW): each user listens to 1-3 genres per window, drawn
    afresh every window so genres appear and disappear.
    """
    rng = np.random.default_rng(seed)
    rows = []
    for i in range(n_users):
        user = f"u{i:02d}"
        for k in range(K):
            active = rng.choice(TOY_GENRES, size=int(rng.integers(1, 4)), replace=False)
            n = int(rng.integers(5, 15))
            for ts in np.sort(rng.integers(k * TOY_WINDOW, (k + 1) * TOY_WINDOW, size=n)):
                rows.append((user, int(ts), str(rng.choice(active)), f"t{int(rng.integers(100))}"))
    return write_csv(path, rows)


def toy_run_config(events: Path, output_dir: Path, K: int = 6, **overrides) -> dict:
    """A small but complete run configuration over ``write_toy_events`` data"""
    raw = {
        "dataset": {"path": str(events), "format": "csv"},
        "windows": {"t_start": 0, "t_end": K * TOY_WINDOW, "K": K},
        "sampling": {"n_per_pair": 20, "total": 200, "holdout": 50, "embed_per_pair": 10, "seed": 0},
        "mining": {"l_max": 4, "top_m": 50},
        "learning": {"lambda": 0.0025, "max_epochs": 30, "top_n": 10, "seed": 0},
        "forest": {"n_trees": 10, "max_depth": 4, "min_samples_leaf": 1, "seed": 0},
        "nmf": {"rank": 2, "iters": 50, "seed": 0},
        "analysis": {
            "reconstruction_sizes": [1, 5],
            "reconstruction_pairs": 5,
            "sweep_lambdas": [0.0, 0.01],
            "variation_buckets": 3,
            "popularity_buckets": 2,
        },
        "synth": {
            "n_pathlets": 3,
            "pathlet_length_range": [3, 3],
            "rank_alphabet_size": 6,
            "n_trajectories": 40,
            "trajectory_length": 9,
            "noise_prob": 0.0,
            "seed": 0,
        },
        "output_dir": str(output_dir),
    }
    for section, values in overrides.items():
        if isinstance(values, dict) and isinstance(raw.get(section), dict):
            raw[section] = {**raw[section], **values}
        else:
            raw[section] = values
    return raw
