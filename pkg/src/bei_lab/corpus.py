"""Graph corpora: labeled bitmask enumeration, isomorphism classes, random samples."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .graph import Graph, GraphError

FILTERS = ("all", "connected", "block", "connected-block")
LABELED_MAX_N = 8
DEDUP_MAX_N = 7
ATLAS_MAX_N = 7


def graph_from_mask(mask: int, n: int) -> Graph:
    return Graph.from_edges(n, [(i + 1, j + 1) for k, (i, j) in enumerate(_kernels.edge_pairs(n)) if mask >> k & 1])


def mask_of(g: Graph) -> int:
    """Edge mask of ``g`` with labels taken in ascending order."""
    index = {v: i for i, v in enumerate(g.vertices)}
    m = 0
    for a, b in g.edges:
        m |= 1 << _kernels.edge_bit(index[a], index[b])
    return m


def filter_masks(masks, n, kind="all", backend=None):
    if kind not in FILTERS:
        raise ValueError(f"unknown filter {kind!r}; expected one of {FILTERS}")
    masks = np.asarray(masks, dtype=np.int64)
    keep = np.ones(masks.shape[0], dtype=bool)
    if kind in ("block", "connected-block"):
        keep &= _kernels.block_graph_flags(masks, n, backend)
    if kind in ("connected", "connected-block"):
        keep &= _kernels.connected_flags(masks, n, backend)
    return masks[keep]


def labeled_masks(n: int, kind: str = "all", dedup: bool = False, backend=None) -> np.ndarray:
    """Edge masks of all labeled graphs on 1..n passing ``kind``, ascending.

    With ``dedup`` each isomorphism class is represented once, by its least
    mask over all relabelings.
    """
    if not 1 <= n <= LABELED_MAX_N:
        raise GraphError(f"labeled enumeration supports 1 <= n <= {LABELED_MAX_N}, got {n}")
    if dedup and n > DEDUP_MAX_N:
        raise GraphError(f"isomorphism dedup supports n <= {DEDUP_MAX_N}, got {n}")
    nbits = n * (n - 1) // 2
    masks = filter_masks(np.arange(1 << nbits, dtype=np.int64), n, kind, backend)
    if dedup:
        masks = np.unique(_kernels.canonical_masks(masks, n, backend))
    return masks


def labeled_graphs(n: int, kind: str = "all", dedup: bool = False, backend=None):
    for m in labeled_masks(n, kind, dedup, backend).tolist():
        yield graph_from_mask(m, n)


def atlas_graphs(n: int, kind: str = "all"):
    """One graph per isomorphism class on exactly n vertices, from the graph atlas."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    if not 1 <= n <= ATLAS_MAX_N:
        raise GraphError(f"atlas covers 1 <= n <= {ATLAS_MAX_N}, got {n}")
    out = []
    for nxg in graph_atlas_g():
        if nxg.number_of_nodes() != n:
            continue
        g = Graph.from_edges(n, [(a + 1, b + 1) for a, b in nxg.edges()])
        if kind in ("connected", "connected-block") and not nx.is_connected(nxg):
            continue
        out.append(g)
    if kind in ("block", "connected-block"):
        flags = _kernels.block_graph_flags(np.array([mask_of(g) for g in out], dtype=np.int64), n)
        out = [g for g, f in zip(out, flags) if f]
    return out


def iso_classes(n_max: int, kind: str = "all", n_min: int = 1):
    """Isomorphism-class representatives for every n_min <= n <= n_max."""
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(atlas_graphs(n, kind))
    return out


def random_graphs(n: int, count: int, seed: int = 0, density: float = 0.5, kind: str = "all", max_tries: int = 100000):
    """``count`` random labeled graphs G(n, density) passing ``kind``; reproducible by ``seed``."""
    rng = np.random.default_rng(seed)
    pairs = _kernels.edge_pairs(n)
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise GraphError(f"could not draw {count} graphs of kind {kind!r} in {max_tries} tries")
        bits = rng.random(len(pairs)) < density
        g = Graph.from_edges(n, [(i + 1, j + 1) for (i, j), b in zip(pairs, bits) if b])
        if kind != "all" and filter_masks([mask_of(g)], n, kind).size == 0:
            continue
        out.append(g)
    return out
