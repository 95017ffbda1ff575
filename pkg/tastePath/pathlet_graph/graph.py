from typing import Iterable, Sequence, Set

from tastePath.core.exceptions import EmptyInputError
from tastePath.logger import get_logger
from tastePath.models.pathlet import Edge, TrajectoryGraph

logger = get_logger("tastePath.pathlet_graph")


def induce_graph(trajectories: Iterable[Sequence[int]]) -> TrajectoryGraph:
    """
    Smallest directed graph on which every trajectory is a walk. Edges are indexed in
    lexicographic order. Trajectories shorter than two nodes add their nodes only.

    Raises:
        EmptyInputError: no trajectory has an edge
    """
    nodes: Set[int] = set()
    edges: Set[Edge] = set()
    for ranks in trajectories:
        ranks = tuple(ranks)
        nodes.update(ranks)
        edges.update(zip(ranks[:-1], ranks[1:]))
    if not edges:
        raise EmptyInputError("no trajectory with at least two nodes; the graph would have no edges")
    graph = TrajectoryGraph(nodes=tuple(sorted(nodes)), edges=tuple(sorted(edges)))
    logger.info(f"trajectory graph: {len(graph.nodes)} nodes, {graph.n_edges} edges")
    return graph
