"""Finite simple graphs on arbitrary positive integer labels.

Vertex sets are plain sorted tuples of labels (``VertexSet``); equality is
structural. Graphs are immutable once built.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

VertexSet = tuple


def vset(members: Iterable[int]) -> VertexSet:
    """Canonical vertex set: duplicate-free, ascending."""
    return tuple(sorted(set(members)))


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _edge(a, b):
    return (a, b) if a < b else (b, a)


class Graph:
    """Simple undirected graph with a fixed label set."""

    __slots__ = ("vertices", "edges", "adj", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        verts = vset(vertices)
        for v in verts:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise GraphError(f"vertex labels must be positive integers, got {v!r}")
        present = set(verts)
        adj = {v: set() for v in verts}
        es = set()
        for a, b in edges:
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if a not in present or b not in present:
                raise GraphError(f"edge {{{a},{b}}} has a vertex outside the vertex set")
            e = _edge(a, b)
            es.add(e)
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(es)))
        object.__setattr__(self, "adj", {v: frozenset(ns) for v, ns in adj.items()})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Graph on vertices 1..n."""
        if n < 1:
            raise GraphError(f"n must be >= 1, got {n}")
        return cls(range(1, n + 1), edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.adj

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.vertices, self.edges)))
        return self._hash

    def __repr__(self):
        if self.vertices == tuple(range(1, self.n + 1)):
            return f"Graph(n={self.n}, edges={list(self.edges)})"
        return f"Graph(vertices={list(self.vertices)}, edges={list(self.edges)})"

    def has_edge(self, a, b) -> bool:
        return a in self.adj and b in self.adj[a]

    def neighbors(self, v) -> VertexSet:
        return vset(self.adj[v])

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        return Graph(keep, [(a, b) for a, b in self.edges if a in keep and b in keep])

    def relabeled(self) -> "Graph":
        """Copy on 1..n preserving label order."""
        index = {v: i + 1 for i, v in enumerate(self.vertices)}
        return Graph.from_edges(self.n, [(index[a], index[b]) for a, b in self.edges])

    def to_networkx(self):
        import networkx as nx

        nxg = nx.Graph()
        nxg.add_nodes_from(self.vertices)
        nxg.add_edges_from(self.edges)
        return nxg


# -- named families ---------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 1."""
    return Graph.from_edges(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(a, b) for a in range(1, p + 1) for b in range(p + 1, p + q + 1)])


# -- parsing ----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(data: bytes, pos: int):
    if pos >= len(data):
        raise Graph6Error("missing size field", pos)
    c = data[pos]
    if not 63 <= c <= 126:
        raise Graph6Error(f"byte {c!r} out of graph6 range 63..126", pos)
    if c < 126:
        return c - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        width, start = 6, pos + 2
    else:
        width, start = 3, pos + 1
    if start + width > len(data):
        raise Graph6Error("truncated size field", len(data))
    n = 0
    for k in range(start, start + width):
        c = data[k]
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} out of graph6 range 63..126", k)
        n = (n << 6) | (c - 63)
    return n, start + width


def parse_graph6(text) -> Graph:
    """Decode one graph6 string; vertex i of the encoding becomes label i+1."""
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.strip()
    if not data:
        raise Graph6Error("empty input", 0)
    pos = len(_G6_HEADER) if data.startswith(_G6_HEADER.encode()) else 0
    n, pos = _g6_size(data, pos)
    if n < 1:
        raise Graph6Error("graph has no vertices", pos - 1)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit field: need {nbytes} bytes, got {len(body)}", len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after bit field", pos + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte_index = k // 6
            c = body[byte_index]
            if not 63 <= c <= 126:
                raise Graph6Error(f"byte {c!r} out of graph6 range 63..126", pos + byte_index)
            if (c - 63) >> (5 - k % 6) & 1:
                edges.append((i + 1, j + 1))
            k += 1
    for byte_index in range(nbytes):
        c = body[byte_index]
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} out of graph6 range 63..126", pos + byte_index)
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6; labels are taken in ascending order."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = [chr(126)] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        out = [chr(126), chr(126)] + [chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.has_edge(g.vertices[i], g.vertices[j]))
    bits.extend([False] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text) -> Graph:
    """Parse ``{"n": 3, "edges": [[1,2],[2,3]], "labels": [...]?}``.

    With ``labels`` the vertex set is that label list (``n`` must match its
    length); otherwise it is 1..n.
    """
    doc = json.loads(text) if isinstance(text, (str, bytes)) else text
    if not isinstance(doc, dict):
        raise GraphError("edge list must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError("field 'n' must be an integer")
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    labels = doc.get("labels")
    if labels is None:
        labels = list(range(1, n + 1))
    else:
        if len(labels) != n or len(set(labels)) != n:
            raise GraphError("'labels' must list n distinct vertices")
    present = set(labels)
    seen = set()
    edges = []
    for item in doc.get("edges", []):
        if not isinstance(item, list) or len(item) != 2 or not all(isinstance(x, int) for x in item):
            raise GraphError(f"edge {item!r} is not a pair of integers")
        a, b = item
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        if a not in present or b not in present:
            raise GraphError(f"edge {item!r}: vertex out of range")
        e = _edge(a, b)
        if e in seen:
            raise GraphError(f"duplicate edge {list(e)}")
        seen.add(e)
        edges.append(e)
    return Graph(labels, edges)


def emit_edge_list(g: Graph) -> str:
    doc = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.vertices != tuple(range(1, g.n + 1)):
        doc["labels"] = list(g.vertices)
    return json.dumps(doc)


# -- connectivity -----------------------------------------------------------

def components(g: Graph, removed: Iterable[int] = ()) -> list[VertexSet]:
    """Connected components of ``g`` minus ``removed``, ordered by smallest member."""
    gone = set(removed)
    seen = set(gone)
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(vset(comp))
    return out


def component_count(g: Graph, removed: Iterable[int] = ()) -> int:
    return len(components(g, removed))


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple           # biconnected components, as VertexSets
    cut_vertices: VertexSet
    isolated: VertexSet
    is_block_graph: bool
    clique_roles: dict = field(default_factory=dict)  # block index -> "leaf" | "branch"

    def non_clique_block(self, g: Graph):
        """First block that does not induce a complete graph, or None."""
        for b in self.blocks:
            if not _is_clique(g, b):
                return b
        return None

    def leaf_cliques(self):
        return [self.blocks[i] for i, r in sorted(self.clique_roles.items()) if r == "leaf"]

    def branch_cliques(self):
        return [self.blocks[i] for i, r in sorted(self.clique_roles.items()) if r == "branch"]


def _is_clique(g, members):
    return all(g.has_edge(a, b) for a, b in combinations(members, 2))


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via iterative DFS low-link (Hopcroft-Tarjan)."""
    disc, low = {}, {}
    blocks = []
    cuts = set()
    time = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = time
        time += 1
        root_children = 0
        edge_stack = []
        stack = [(root, None, iter(sorted(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = time
                    time += 1
                    edge_stack.append((u, w))
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                members = set()
                while True:
                    a, b = edge_stack.pop()
                    members.update((a, b))
                    if (a, b) == (parent, u):
                        break
                blocks.append(vset(members))
        if root_children > 1:
            cuts.add(root)
    blocks.sort()
    isolated = vset(v for v in g.vertices if not g.adj[v])
    is_block = all(_is_clique(g, b) for b in blocks)
    roles = {}
    if is_block:
        for i, b in enumerate(blocks):
            shared = sum(1 for v in b if v in cuts)
            roles[i] = "leaf" if shared <= 1 else "branch"
    return BlockDecomposition(tuple(blocks), vset(cuts), isolated, is_block, roles)


def cut_vertices(g: Graph) -> VertexSet:
    return block_decomposition(g).cut_vertices


def is_block_graph(g: Graph) -> bool:
    return block_decomposition(g).is_block_graph


# -- vertex surgery ---------------------------------------------------------

def complete_neighborhood(g: Graph, v: int) -> Graph:
    """G_v: ``g`` plus every edge between two neighbours of the cut vertex ``v``."""
    if v not in g:
        raise GraphError(f"vertex {v} not in graph")
    if v not in cut_vertices(g):
        raise GraphError(f"vertex {v} is not a cut vertex")
    extra = combinations(sorted(g.adj[v]), 2)
    return Graph(g.vertices, list(g.edges) + list(extra))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on V(g) minus ``v``; other labels are kept."""
    if v not in g:
        raise GraphError(f"vertex {v} out of range")
    if g.n == 1:
        raise GraphError("cannot delete the only vertex")
    return g.induced(u for u in g.vertices if u != v)
