import pytest

from bei_lab.graph import GraphError, complete_graph, path_graph
from bei_lab.oracle import OracleBoundError, verify_ohtani, verify_primary_decomposition

from conftest import K23, STAR, TREE, SES10


@pytest.mark.parametrize("g", [path_graph(3), complete_graph(2), STAR], ids=["P3", "K2", "star"])
def test_decomposition_small(g):
    r = verify_primary_decomposition(g)
    assert r.holds
    assert len(r.timings) == r.details["primes"] + 1


def test_decomposition_k23_both_primes():
    for p in (32003, 101):
        assert verify_primary_decomposition(K23, prime=p).holds


def test_decomposition_fails_for_wrong_family():
    # sanity: the oracle can say no; J(P3) differs from the single prime of K3
    from bei_lab.groebner import Ideal, ideal_equal
    from bei_lab.primes import associated_primes, bei_generators, bei_ring, generators

    r = bei_ring((1, 2, 3))
    (p_empty,) = associated_primes(complete_graph(3)).primes
    assert not ideal_equal(Ideal(r, generators(p_empty, r)), Ideal(r, bei_generators(path_graph(3), r)))


@pytest.mark.parametrize("g,v", [(path_graph(3), 2), (STAR, 2), (TREE, 2), (TREE, 3)],
                         ids=["P3", "star", "tree-2", "tree-3"])
def test_ohtani_examples(g, v):
    r = verify_ohtani(g, v)
    assert r.holds, r.details
    assert r.details == {"splitting": True, "sum": True, "q2": True}
    assert r.to_dict()["v"] == v


def test_ohtani_rejects_non_cut_vertex():
    with pytest.raises(GraphError, match="not a cut vertex"):
        verify_ohtani(path_graph(3), 1)


def test_bound():
    with pytest.raises(OracleBoundError):
        verify_primary_decomposition(SES10)
    with pytest.raises(OracleBoundError):
        verify_ohtani(SES10, 7)
    assert verify_primary_decomposition(path_graph(4), bound=4).holds
