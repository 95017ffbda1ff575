import json
from collections import defaultdict
from typing import Dict, Mapping, Optional

import numpy as np

from tastePath.constants import CandidateKind
from tastePath.core.exceptions import ShapeError
from tastePath.logger import get_logger
from tastePath.models.allocation import CandidatePair
from tastePath.models.metrics import GenreGraph
from tastePath.models.pathlet import PathletDictionary
from tastePath.models.trajectory import RankMap

logger = get_logger("tastePath.evaluate")


def extended_pathlet_graph(
    dictionary: PathletDictionary,
    embeddings: Mapping[CandidatePair, np.ndarray],
    rank_maps: Mapping[CandidatePair, RankMap],
    correlations: np.ndarray,
    genre: str,
    outcome: str,
    kind: Optional[CandidateKind] = None,
) -> GenreGraph:
    """
    Genre graph of the pathlets used by pairs anchored at ``genre``. Each used pathlet
    is mapped back to genre names through the pair's rank map; every consecutive genre
    pair gains coordinate * max(0, correlation). Edges come sorted by descending weight.
    """
    correlations = np.asarray(correlations, dtype=np.float64)
    if len(correlations) != len(dictionary):
        raise ShapeError(f"{len(correlations)} correlations for {len(dictionary)} pathlets")
    gain = np.clip(correlations, 0.0, None)
    weights: Dict = defaultdict(float)
    unmapped = 0
    for pair in sorted(embeddings):
        if pair.genre != genre or (kind is not None and pair.kind != kind):
            continue
        coords = embeddings[pair]
        rank_map = rank_maps.get(pair)
        for pos in np.flatnonzero((coords > 0) & (gain > 0)):
            ranks = dictionary.pathlets[pos].ranks
            if rank_map is None or any(r not in rank_map.ranks.values() for r in ranks):
                unmapped += 1
                continue
            names = [rank_map.genre(r) for r in ranks]
            for src, dst in zip(names[:-1], names[1:]):
                weights[(src, dst)] += float(coords[pos] * gain[pos])
    logger.counted_warning(unmapped, f"used pathlets without a rank mapping for anchor {genre!r}")
    edges = sorted(((s, d, w) for (s, d), w in weights.items() if w > 0), key=lambda e: (-e[2], e[0], e[1]))
    return GenreGraph(genre=genre, outcome=outcome, edges=edges)


def extended_pathlet_graphs(
    dictionary: PathletDictionary,
    embeddings: Mapping[CandidatePair, np.ndarray],
    rank_maps: Mapping[CandidatePair, RankMap],
    corr_appearance: np.ndarray,
    corr_disappearance: np.ndarray,
    genre: str,
) -> Dict[str, GenreGraph]:
    """Both outcome graphs for one genre, each built from the pairs of its own candidate kind"""
    return {
        CandidateKind.APPEARANCE.value: extended_pathlet_graph(
            dictionary, embeddings, rank_maps, corr_appearance, genre,
            CandidateKind.APPEARANCE.value, CandidateKind.APPEARANCE,
        ),
        CandidateKind.DISAPPEARANCE.value: extended_pathlet_graph(
            dictionary, embeddings, rank_maps, corr_disappearance, genre,
            CandidateKind.DISAPPEARANCE.value, CandidateKind.DISAPPEARANCE,
        ),
    }


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: GenreGraph) -> str:
    lines = [f"digraph {_quote(f'{graph.genre} {graph.outcome}')} {{"]
    for src, dst, weight in graph.edges:
        lines.append(f"  {_quote(src)} -> {_quote(dst)} [weight={weight:.10g}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: GenreGraph) -> str:
    payload = {
        "genre": graph.genre,
        "outcome": graph.outcome,
        "edges": [{"source": s, "target": d, "weight": w} for s, d, w in graph.edges],
    }
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
