from tastePath.pathlet_graph.encoding import encode, incidence_matrix
from tastePath.pathlet_graph.graph import induce_graph
from tastePath.pathlet_graph.mining import count_subsequences, mine_candidates

__all__ = ["count_subsequences", "encode", "incidence_matrix", "induce_graph", "mine_candidates"]
