"""The cut-set family C(G) and the reachability predicate behind it."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, GraphError, VertexSet, component_count, vset

DEFAULT_BOUND = 16


class EnumerationBoundError(GraphError):
    pass


def _check_subset(g, s):
    missing = [v for v in s if v not in g]
    if missing:
        raise GraphError(f"vertices {missing} are not in the graph")


def cut_set_witness(g: Graph, s) -> int | None:
    """A vertex v of ``s`` with c(s - v) >= c(s), or None if ``s`` is a cut set."""
    s = vset(s)
    _check_subset(g, s)
    if not s:
        return None
    c = component_count(g, s)
    for v in s:
        if component_count(g, [u for u in s if u != v]) >= c:
            return v
    return None


def is_cut_set(g: Graph, s) -> bool:
    return cut_set_witness(g, s) is None


def canonical_order(sets):
    return sorted({vset(s) for s in sets}, key=lambda s: (len(s), s))


@dataclass(frozen=True)
class CutSetFamily:
    graph: Graph
    sets: tuple

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __contains__(self, s):
        return vset(s) in self._index

    @property
    def _index(self):
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = frozenset(self.sets)
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def as_set(self) -> frozenset:
        return self._index

    def to_json(self) -> str:
        return json.dumps([list(s) for s in self.sets])


def _adjacency_masks(g):
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = np.zeros(g.n, dtype=np.int64)
    for a, b in g.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    return adj


def component_table(g: Graph, backend=None) -> np.ndarray:
    """c_G(S) for every S, indexed by the bitmask of S over ``g.vertices``."""
    return _kernels.component_count_table(_adjacency_masks(g), g.n, backend)


def enumerate_cutsets(g: Graph, bound: int = DEFAULT_BOUND, method: str = "table", backend=None) -> CutSetFamily:
    """All S in C(G), ordered by size then lexicographically.

    ``method="table"`` precomputes c_G over the whole subset lattice with a
    bitmask kernel; ``method="direct"`` runs the definitional test on every
    subset and is kept as the reference route.
    """
    n = g.n
    if n > bound:
        raise EnumerationBoundError(f"graph has {n} vertices; exhaustive enumeration bound is {bound}")
    verts = g.vertices
    if method == "table":
        flags = _kernels.cutset_flags(component_table(g, backend), n, backend)
        masks = np.flatnonzero(flags)
        found = [tuple(verts[i] for i in range(n) if m >> i & 1) for m in masks.tolist()]
    elif method == "direct":
        found = []
        for m in range(1 << n):
            s = tuple(verts[i] for i in range(n) if m >> i & 1)
            if is_cut_set(g, s):
                found.append(s)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CutSetFamily(g, tuple(canonical_order(found)))


def reachable(g: Graph, removed, a: int, b: int) -> bool:
    """True iff ``a`` and ``b`` share a component of ``g`` minus ``removed``."""
    gone = set(removed)
    for x in (a, b):
        if x not in g:
            raise GraphError(f"vertex {x} not in graph")
        if x in gone:
            raise GraphError(f"vertex {x} was removed")
    if a == b:
        return True
    seen = {a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w == b:
                return True
            if w not in seen and w not in gone:
                seen.add(w)
                queue.append(w)
    return False


__all__ = [
    "CutSetFamily",
    "DEFAULT_BOUND",
    "EnumerationBoundError",
    "VertexSet",
    "canonical_order",
    "component_table",
    "cut_set_witness",
    "enumerate_cutsets",
    "is_cut_set",
    "reachable",
]
