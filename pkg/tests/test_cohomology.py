import json

import pytest
from hypothesis import given, settings

from bei_lab.blocks import NotBlockGraphError
from bei_lab.cohomology import cohomology_profile, depth_check, explain
from bei_lab.corpus import iso_classes
from bei_lab.graph import Graph, block_decomposition, complete_graph, path_graph
from bei_lab.groebner import Ideal, krull_dimension
from bei_lab.primes import bei_generators, bei_ring

from conftest import EMBEDDED8, K23, STAR
from test_graph import graphs


def test_path_is_cohen_macaulay():
    prof = cohomology_profile(path_graph(3))
    assert prof.nonvanishing == (4,)
    assert prof.is_cohen_macaulay and prof.depth == prof.dimension == 4


def test_star_profile():
    prof = cohomology_profile(STAR)
    assert prof.nonvanishing == (5, 6)
    assert [p.s for p in prof.per_index[5]] == [()]
    assert [p.s for p in prof.per_index[6]] == [(2,)]
    assert not prof.is_cohen_macaulay
    assert prof.depth == 5 and prof.dimension == 6
    assert set(prof.per_index) == set(range(9))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_complete_graph_profile(n):
    prof = cohomology_profile(complete_graph(n))
    assert prof.nonvanishing == (n + 1,)
    assert prof.is_cohen_macaulay


@pytest.mark.parametrize("g", [K23, EMBEDDED8], ids=["K23", "embedded8"])
def test_non_block_graphs_rejected(g):
    with pytest.raises(NotBlockGraphError, match="does not induce a complete subgraph"):
        cohomology_profile(g)


def test_depth_examples():
    assert depth_check(complete_graph(2)) == (3, 3, True)
    assert depth_check(STAR) == (5, 5, True)
    two_edges = Graph.from_edges(4, [(1, 2), (3, 4)])
    assert depth_check(two_edges) == (6, 6, True)
    assert depth_check(Graph([1, 2, 3])) == (6, 6, True)


def test_explain_nonzero():
    text = explain(STAR, 5)
    assert "S = {}" in text
    assert "height = |S| + n - c(S) = 0 + 4 - 1 = 3" in text
    assert "dim = 2n - height = 8 - 3 = 5" in text
    assert "attached primes" in text


def test_explain_vanishing():
    assert explain(STAR, 4).endswith("vanishes: no associated prime of dimension 4")
    with pytest.raises(ValueError):
        explain(STAR, 9)


def test_profile_json():
    doc = json.loads(cohomology_profile(STAR).to_json())
    assert doc["nonvanishing"] == [5, 6] and doc["depth"] == 5 and doc["dimension"] == 6
    assert doc["per_index"]["6"][0]["S"] == [2]


def test_profile_invariants_block_graphs_n7():
    for g in iso_classes(7, "block"):
        prof = cohomology_profile(g)
        total = sum(len(ps) for ps in prof.per_index.values())
        assert prof.depth == prof.n + prof.c
        assert all(0 <= i <= 2 * prof.n for i in prof.nonvanishing)
        assert total == len(set(p.s for ps in prof.per_index.values() for p in ps))
        assert prof.is_cohen_macaulay == (len(prof.nonvanishing) == 1)


def test_cohen_macaulay_matches_clique_count_criterion():
    # independent criterion for block graphs: CM iff every vertex lies in at most two maximal cliques
    for g in iso_classes(7, "block"):
        bd = block_decomposition(g)
        cliques = list(bd.blocks) + [(v,) for v in bd.isolated]
        crowded = any(sum(v in b for b in cliques) > 2 for v in g.vertices)
        assert cohomology_profile(g).is_cohen_macaulay == (not crowded), g


def test_dimension_matches_groebner_oracle():
    for g in iso_classes(4, "block"):
        r = bei_ring(g.vertices)
        gb = Ideal(r, bei_generators(g, r)).groebner()
        assert cohomology_profile(g).dimension == krull_dimension(gb), g


def test_disjoint_cliques_are_cohen_macaulay():
    g = Graph.from_edges(7, [(1, 2), (1, 3), (2, 3), (4, 5), (6, 7)])
    prof = cohomology_profile(g)
    assert prof.is_cohen_macaulay and prof.depth == 7 + 3


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_profile_partitions_primes(g):
    if not block_decomposition(g).is_block_graph:
        with pytest.raises(NotBlockGraphError):
            cohomology_profile(g)
        return
    prof = cohomology_profile(g)
    for i, ps in prof.per_index.items():
        assert all(p.dimension == i for p in ps)
