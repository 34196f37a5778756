import pytest

from bei_lab.graph import Graph, complete_bipartite, path_graph

STAR = Graph.from_edges(4, [(1, 2), (2, 3), (2, 4)])
TREE = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (2, 5)])
K23 = complete_bipartite(2, 3)
EMBEDDED8 = Graph.from_edges(8, [(1, 2), (1, 3), (1, 4), (1, 6), (2, 4), (2, 5), (2, 7), (3, 4), (3, 5),
                                 (3, 7), (4, 5), (4, 8), (5, 6)])
# block graph from the short exact sequence example, with v = 7
SES10 = Graph.from_edges(10, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 6), (3, 7), (6, 7),
                              (7, 8), (8, 9), (8, 10), (9, 10)])
CATERPILLAR = Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)])
P3 = path_graph(3)
P4 = path_graph(4)


@pytest.fixture
def star():
    return STAR


@pytest.fixture
def tree():
    return TREE
