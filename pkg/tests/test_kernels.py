from math import factorial

import numpy as np
import pytest

from bei_lab import _kernels
from bei_lab.corpus import atlas_graphs, graph_from_mask, labeled_masks, mask_of
from bei_lab.cutsets import _adjacency_masks
from bei_lab.graph import block_decomposition, component_count, components

BACKENDS = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])


def test_backend_flag_reported():
    assert _kernels.BACKEND in ("numba", "numpy")


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_component_table_matches_bfs(backend, n):
    for m in range(1 << (n * (n - 1) // 2)):
        g = graph_from_mask(m, n)
        table = _kernels.component_count_table(_adjacency_masks(g), n, backend)
        for s in range(1 << n):
            removed = [i + 1 for i in range(n) if s >> i & 1]
            assert table[s] == component_count(g, removed)


@pytest.mark.parametrize("backend", BACKENDS)
def test_component_table_sixteen_vertices(backend):
    n = 16
    adj = np.zeros(n, dtype=np.int64)
    for i in range(n - 1):  # path on 16 vertices
        adj[i] |= 1 << (i + 1)
        adj[i + 1] |= 1 << i
    table = _kernels.component_count_table(adj, n, backend)
    assert table[0] == 1 and table[(1 << n) - 1] == 0
    assert table[0b10] == 2 and table[0b1010] == 3


def test_backends_agree_on_random_graphs():
    rng = np.random.default_rng(7)
    for n in (6, 9, 11):
        nbits = n * (n - 1) // 2
        masks = rng.integers(0, 1 << min(nbits, 62), size=30, dtype=np.int64) & ((1 << nbits) - 1)
        for m in masks.tolist():
            adj = _kernels.adjacency_from_edge_mask(m, n)
            t1 = _kernels.component_count_table(adj, n, "numpy")
            t2 = _kernels.component_count_table(adj, n, "numba")
            assert np.array_equal(t1, t2)
            assert np.array_equal(_kernels.cutset_flags(t1, n, "numpy"), _kernels.cutset_flags(t1, n, "numba"))
        assert np.array_equal(_kernels.block_graph_flags(masks, n, "numpy"),
                              _kernels.block_graph_flags(masks, n, "numba"))
        assert np.array_equal(_kernels.connected_flags(masks, n, "numpy"),
                              _kernels.connected_flags(masks, n, "numba"))


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_block_and_connected_flags_match_graph_routines(backend, n):
    masks = np.arange(1 << (n * (n - 1) // 2), dtype=np.int64)
    blocks = _kernels.block_graph_flags(masks, n, backend)
    conn = _kernels.connected_flags(masks, n, backend)
    for m, b, c in zip(masks.tolist(), blocks, conn):
        g = graph_from_mask(m, n)
        assert b == block_decomposition(g).is_block_graph
        assert c == (len(components(g)) == 1)


def test_block_flags_match_on_all_iso_classes_n7():
    graphs = atlas_graphs(7)
    masks = np.array([mask_of(g) for g in graphs], dtype=np.int64)
    for backend in BACKENDS:
        flags = _kernels.block_graph_flags(masks, 7, backend)
        assert [bool(f) for f in flags] == [block_decomposition(g).is_block_graph for g in graphs]


def _automorphisms(g):
    from networkx.algorithms.isomorphism import GraphMatcher

    nxg = g.to_networkx()
    return sum(1 for _ in GraphMatcher(nxg, nxg).isomorphisms_iter())


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_labeled_block_counts_match_orbit_counting(n):
    # every isomorphism class contributes n!/|Aut| labeled graphs
    expected = sum(factorial(n) // _automorphisms(g) for g in atlas_graphs(n, "block"))
    assert len(labeled_masks(n, "block")) == expected


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n, kind", [(4, "all"), (5, "all"), (6, "block"), (6, "connected-block")])
def test_dedup_matches_atlas_class_counts(backend, n, kind):
    assert len(labeled_masks(n, kind, dedup=True, backend=backend)) == len(atlas_graphs(n, kind))


def test_canonical_mask_invariant_under_relabeling():
    rng = np.random.default_rng(3)
    n = 6
    for m in rng.integers(0, 1 << 15, size=20).tolist():
        g = graph_from_mask(m, n)
        perm = rng.permutation(n) + 1
        h = type(g).from_edges(n, [(int(perm[a - 1]), int(perm[b - 1])) for a, b in g.edges])
        c = _kernels.canonical_masks(np.array([mask_of(g), mask_of(h)], dtype=np.int64), n)
        assert c[0] == c[1] <= min(mask_of(g), mask_of(h))


def test_env_flag_selects_numpy_fallback():
    import os
    import subprocess
    import sys

    code = ("from bei_lab import _kernels, enumerate_cutsets\n"
            "from bei_lab.graph import path_graph\n"
            "print(_kernels.BACKEND, enumerate_cutsets(path_graph(4)).sets)")
    env = dict(os.environ, BEI_LAB_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split()[0] == "numpy"
    assert "((), (2,), (3,))" in out.stdout
