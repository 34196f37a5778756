"""Bitmask kernels for the exhaustive loops.

Every kernel has a numba ``@njit`` version and a pure-numpy version with the
same signature. The numba path is used when numba imports cleanly and the
environment variable ``BEI_LAB_DISABLE_NUMBA`` is unset or ``0``.

Conventions: vertex ``i`` is bit ``i`` of a vertex mask; the edge ``{i, j}``
with ``i < j`` is bit ``j*(j-1)//2 + i`` of an edge mask (graph6 column order).
"""

import os
from itertools import permutations

import numpy as np

_DISABLED = os.environ.get("BEI_LAB_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("disabled by BEI_LAB_DISABLE_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def edge_bit(i, j):
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def edge_pairs(n):
    """(i, j) for every edge bit, in bit order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def adjacency_from_edge_mask(mask, n):
    adj = np.zeros(n, dtype=np.int64)
    for k, (i, j) in enumerate(edge_pairs(n)):
        if mask >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


# -- component counts over every removed-vertex subset ----------------------

@njit(cache=True)
def _nb_component_count_table(adj, n):
    full = (1 << n) - 1
    out = np.empty(1 << n, dtype=np.int8)
    for removed in range(1 << n):
        rem = full & ~removed
        c = 0
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                v = 0
                while (low >> v) != 1:
                    v += 1
                new = adj[v] & rem & ~comp
                comp |= new
                frontier |= new
            rem &= ~comp
            c += 1
        out[removed] = c
    return out


def _np_component_count_table(adj, n):
    full = (1 << n) - 1
    removed = np.arange(1 << n, dtype=np.int64)
    rem = full & ~removed
    counts = np.zeros(1 << n, dtype=np.int8)
    adj = np.asarray(adj, dtype=np.int64)
    while True:
        live = rem != 0
        if not live.any():
            break
        comp = rem & -rem
        while True:
            grown = comp.copy()
            for v in range(n):
                grown |= np.where((comp >> v) & 1 == 1, adj[v], 0)
            grown &= rem
            if np.array_equal(grown, comp):
                break
            comp = grown
        rem &= ~comp
        counts += live
    return counts


@njit(cache=True)
def _nb_cutset_flags(table, n):
    size = 1 << n
    out = np.zeros(size, dtype=np.bool_)
    for s in range(size):
        ok = True
        c = table[s]
        for v in range(n):
            if s >> v & 1:
                if table[s ^ (1 << v)] >= c:
                    ok = False
                    break
        out[s] = ok
    return out


def _np_cutset_flags(table, n):
    idx = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for v in range(n):
        has = (idx >> v) & 1 == 1
        ok &= ~has | (table[idx ^ (1 << v)] < table)
    return ok


# -- per-graph classification over batches of edge masks --------------------

@njit(cache=True)
def _nb_is_block(adj, n):
    # diamond-free: common neighbourhood of every edge is a clique
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] >> v & 1:
                common = adj[u] & adj[v]
                for w in range(n):
                    if common >> w & 1:
                        if (common & ~(1 << w)) & ~adj[w]:
                            return False
    # chordal: repeated removal of simplicial vertices empties the graph
    rem = (1 << n) - 1
    while rem:
        drop = 0
        for v in range(n):
            if rem >> v & 1:
                nb = adj[v] & rem
                simplicial = True
                for w in range(n):
                    if nb >> w & 1:
                        if (nb & ~(1 << w)) & ~adj[w]:
                            simplicial = False
                            break
                if simplicial:
                    drop |= 1 << v
        if drop == 0:
            return False
        rem &= ~drop
    return True


@njit(cache=True)
def _nb_is_connected(adj, n):
    full = (1 << n) - 1
    comp = 1
    frontier = 1
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        v = 0
        while (low >> v) != 1:
            v += 1
        new = adj[v] & full & ~comp
        comp |= new
        frontier |= new
    return comp == full


@njit(cache=True)
def _nb_adjacency(mask, n, pi, pj):
    adj = np.zeros(n, dtype=np.int64)
    for k in range(pi.shape[0]):
        if mask >> k & 1:
            adj[pi[k]] |= 1 << pj[k]
            adj[pj[k]] |= 1 << pi[k]
    return adj


@njit(cache=True)
def _nb_block_graph_flags(masks, n, pi, pj):
    out = np.empty(masks.shape[0], dtype=np.bool_)
    for t in range(masks.shape[0]):
        out[t] = _nb_is_block(_nb_adjacency(masks[t], n, pi, pj), n)
    return out


@njit(cache=True)
def _nb_connected_flags(masks, n, pi, pj):
    out = np.empty(masks.shape[0], dtype=np.bool_)
    for t in range(masks.shape[0]):
        out[t] = _nb_is_connected(_nb_adjacency(masks[t], n, pi, pj), n)
    return out


def _np_adjacency(masks, n, pi, pj):
    adj = np.zeros((masks.shape[0], n), dtype=np.int64)
    for k in range(pi.shape[0]):
        bit = (masks >> k) & 1
        adj[:, pi[k]] |= bit << pj[k]
        adj[:, pj[k]] |= bit << pi[k]
    return adj


def _np_clique_ok(sets, adj, n):
    ok = np.ones(sets.shape[0], dtype=bool)
    for w in range(n):
        has = (sets >> w) & 1 == 1
        ok &= ~has | (((sets & ~(1 << w)) & ~adj[:, w]) == 0)
    return ok


def _np_block_graph_flags(masks, n, pi, pj):
    adj = _np_adjacency(masks, n, pi, pj)
    ok = np.ones(masks.shape[0], dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            edge = (adj[:, u] >> v) & 1 == 1
            common = adj[:, u] & adj[:, v]
            ok &= ~edge | _np_clique_ok(common, adj, n)
    rem = np.full(masks.shape[0], (1 << n) - 1, dtype=np.int64)
    for _ in range(n):
        drop = np.zeros_like(rem)
        for v in range(n):
            inside = (rem >> v) & 1 == 1
            simp = inside & _np_clique_ok(adj[:, v] & rem, adj, n)
            drop |= np.where(simp, 1 << v, 0)
        rem &= ~drop
    return ok & (rem == 0)


def _np_connected_flags(masks, n, pi, pj):
    adj = _np_adjacency(masks, n, pi, pj)
    comp = np.ones(masks.shape[0], dtype=np.int64)
    for _ in range(n):
        grown = comp.copy()
        for v in range(n):
            grown |= np.where((comp >> v) & 1 == 1, adj[:, v], 0)
        comp = grown
    return comp == (1 << n) - 1


# -- canonical forms --------------------------------------------------------

def permutation_bit_table(n):
    """perm_bits[p, k]: where edge bit k lands under the p-th permutation."""
    pairs = edge_pairs(n)
    perms = list(permutations(range(n)))
    table = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for p, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            table[p, k] = edge_bit(perm[i], perm[j])
    return table


@njit(cache=True)
def _nb_canonical_masks(masks, perm_bits):
    out = np.empty(masks.shape[0], dtype=np.int64)
    nperm, nbits = perm_bits.shape
    for t in range(masks.shape[0]):
        m = masks[t]
        best = m
        for p in range(nperm):
            r = 0
            for k in range(nbits):
                if m >> k & 1:
                    r |= 1 << perm_bits[p, k]
            if r < best:
                best = r
        out[t] = best
    return out


def _np_canonical_masks(masks, perm_bits):
    best = masks.copy()
    for p in range(perm_bits.shape[0]):
        r = np.zeros_like(masks)
        for k in range(perm_bits.shape[1]):
            r |= ((masks >> k) & 1) << perm_bits[p, k]
        np.minimum(best, r, out=best)
    return best


# -- dispatch ---------------------------------------------------------------

MAX_EDGE_MASK_N = 11


def _pairs_arrays(n):
    if n > MAX_EDGE_MASK_N:
        raise ValueError(f"edge masks are int64; n must be <= {MAX_EDGE_MASK_N}, got {n}")
    pairs = edge_pairs(n)
    pi = np.array([i for i, _ in pairs], dtype=np.int64)
    pj = np.array([j for _, j in pairs], dtype=np.int64)
    return pi, pj


def component_count_table(adj, n, backend=None):
    """Array indexed by removed-vertex mask: component count of the rest."""
    adj = np.ascontiguousarray(adj, dtype=np.int64)
    if (backend or BACKEND) == "numba" and HAVE_NUMBA:
        return _nb_component_count_table(adj, n)
    return _np_component_count_table(adj, n)


def cutset_flags(table, n, backend=None):
    """Boolean array over vertex masks: S is a cut set of the graph."""
    table = np.ascontiguousarray(table, dtype=np.int8)
    if (backend or BACKEND) == "numba" and HAVE_NUMBA:
        return _nb_cutset_flags(table, n)
    return _np_cutset_flags(table, n)


def block_graph_flags(masks, n, backend=None):
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    pi, pj = _pairs_arrays(n)
    if (backend or BACKEND) == "numba" and HAVE_NUMBA:
        return _nb_block_graph_flags(masks, n, pi, pj)
    return _np_block_graph_flags(masks, n, pi, pj)


def connected_flags(masks, n, backend=None):
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    pi, pj = _pairs_arrays(n)
    if (backend or BACKEND) == "numba" and HAVE_NUMBA:
        return _nb_connected_flags(masks, n, pi, pj)
    return _np_connected_flags(masks, n, pi, pj)


def canonical_masks(masks, n, backend=None):
    """Lexicographically least edge mask over all relabelings."""
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    perm_bits = permutation_bit_table(n)
    if (backend or BACKEND) == "numba" and HAVE_NUMBA:
        return _nb_canonical_masks(masks, perm_bits)
    return _np_canonical_masks(masks, perm_bits)
