from tastePath.embed.greedy import GreedyEmbedder, embed_trajectory
from tastePath.embed.pairs import embed_pair, embed_pairs, embedding_frame, group_by_pair, reduced_code_embedding

__all__ = [
    "GreedyEmbedder",
    "embed_pair",
    "embed_pairs",
    "embed_trajectory",
    "embedding_frame",
    "group_by_pair",
    "reduced_code_embedding",
]
