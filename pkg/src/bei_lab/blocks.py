"""Cut-vertex surgery on block graphs and checks of the cut-set identities.

For a cut vertex v of G: G' completes the neighbourhood of v, G'' deletes v,
and H deletes v from G'. The verifiers compare cut-set families across these
graphs by enumerating both sides independently and return a witness on
failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .cutsets import enumerate_cutsets, reachable
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    block_decomposition,
    complete_neighborhood,
    component_count,
    components,
    delete_vertex,
    emit_graph6,
    vset,
)


class NotBlockGraphError(GraphError):
    pass


class TheoremViolation(AssertionError):
    """A computation contradicted a statement that is proved to hold."""


@dataclass(frozen=True)
class IdealDescriptor:
    """Binomial edge ideal of ``edges`` plus the variable pairs x_v, y_v for ``adjoined``."""

    vertices: VertexSet
    edges: tuple
    adjoined: VertexSet = ()


@dataclass(frozen=True)
class SurgeryTriple:
    base: Graph
    v: int
    g_prime: Graph
    g_dprime: Graph
    h: Graph
    q1: IdealDescriptor
    q2: IdealDescriptor
    q3: IdealDescriptor


@dataclass
class CheckResult:
    property: str
    graph: Graph
    v: int | None
    holds: bool
    witness: object = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds

    def to_dict(self):
        w = self.witness
        if isinstance(w, tuple):
            w = list(w)
        return {"property": self.property, "graph": emit_graph6(self.graph), "v": self.v,
                "holds": self.holds, "witness": w}

    def to_json(self):
        return json.dumps(self.to_dict())


def _require_cut_vertex(g, v, need_block=True):
    bd = block_decomposition(g)
    if need_block and not bd.is_block_graph:
        raise NotBlockGraphError(f"not a block graph: block {list(bd.non_clique_block(g))} is not a clique")
    if v not in bd.cut_vertices:
        raise GraphError(f"vertex {v} is not a cut vertex")
    return bd


def build_triple(g: Graph, v: int) -> SurgeryTriple:
    gp = complete_neighborhood(g, v)
    gdp = delete_vertex(g, v)
    h = delete_vertex(gp, v)
    verts = g.vertices
    return SurgeryTriple(
        base=g, v=v, g_prime=gp, g_dprime=gdp, h=h,
        q1=IdealDescriptor(verts, gp.edges),
        q2=IdealDescriptor(verts, gdp.edges, (v,)),
        q3=IdealDescriptor(verts, h.edges, (v,)),
    )


# -- leaf cliques -----------------------------------------------------------

def find_extremal_leaf_clique(g: Graph) -> tuple:
    """A leaf clique meeting exactly one branch clique, and that branch clique.

    Leaf cliques are scanned in canonical order; the first valid one wins.
    """
    bd = block_decomposition(g)
    if not bd.is_block_graph:
        raise NotBlockGraphError(f"not a block graph: block {list(bd.non_clique_block(g))} is not a clique")
    if len(bd.cut_vertices) < 2:
        raise GraphError("need at least two cut vertices")
    branches = bd.branch_cliques()
    for leaf in bd.leaf_cliques():
        met = [b for b in branches if set(b) & set(leaf)]
        if len(met) == 1:
            return leaf, met[0]
    # only reachable when no component carries two cut vertices
    raise GraphError("no leaf clique meets exactly one branch clique (cut vertices lie in different components)")


# -- property (dagger) and good cut vertices --------------------------------

def _dagger_sides(g, v):
    gdp = delete_vertex(g, v)
    lhs = enumerate_cutsets(gdp).as_set()
    rhs = {vset(u for u in s if u != v) for s in enumerate_cutsets(g) if v in s}
    return lhs, rhs


def satisfies_dagger(g: Graph, v: int) -> CheckResult:
    """C(G - v) == {S - v : S in C(G), v in S}.

    The witness is the first S in C(G - v) (canonical order) with S + v not in
    C(G), or any right-hand member missing on the left.
    """
    _require_cut_vertex(g, v)
    lhs, rhs = _dagger_sides(g, v)
    extra = sorted(lhs - rhs, key=lambda s: (len(s), s))
    missing = sorted(rhs - lhs, key=lambda s: (len(s), s))
    witness = extra[0] if extra else (missing[0] if missing else None)
    return CheckResult("dagger", g, v, not extra and not missing, witness)


def find_good_cut_vertex(g: Graph) -> int:
    """Smallest cut vertex satisfying the dagger property."""
    bd = block_decomposition(g)
    if not bd.is_block_graph:
        raise NotBlockGraphError(f"not a block graph: block {list(bd.non_clique_block(g))} is not a clique")
    if not bd.cut_vertices:
        raise GraphError("graph has no cut vertex")
    for v in bd.cut_vertices:
        if satisfies_dagger(g, v):
            return v
    raise TheoremViolation(f"no cut vertex of {emit_graph6(g)} satisfies the dagger property")


def good_cut_vertex_constructive(g: Graph) -> int:
    """Good cut vertex found by peeling extremal leaf cliques.

    If the cut vertex w of an extremal leaf clique L lies in two or more leaf
    cliques, w is good. Otherwise recurse on G minus (L - w). Works inside the
    first connected component that has a cut vertex.
    """
    bd = block_decomposition(g)
    if not bd.is_block_graph:
        raise NotBlockGraphError(f"not a block graph: block {list(bd.non_clique_block(g))} is not a clique")
    if not bd.cut_vertices:
        raise GraphError("graph has no cut vertex")
    comp = next(c for c in components(g) if set(c) & set(bd.cut_vertices))
    return _constructive(g.induced(comp))


def _constructive(g):
    bd = block_decomposition(g)
    cuts = bd.cut_vertices
    if len(cuts) == 1:
        return cuts[0]
    leaf, _ = find_extremal_leaf_clique(g)
    w = next(u for u in leaf if u in cuts)
    leaves_at_w = [c for c in bd.leaf_cliques() if w in c]
    if len(leaves_at_w) >= 2:
        return w
    return _constructive(g.induced(u for u in g.vertices if u == w or u not in leaf))


# -- verifiers --------------------------------------------------------------

def _first(sets):
    return min(sets, key=lambda s: (len(s), s)) if sets else None


def verify_gprime_cutsets(g: Graph, v: int) -> CheckResult:
    """C(G_v) == {S in C(G) : v not in S}."""
    _require_cut_vertex(g, v)
    lhs = enumerate_cutsets(complete_neighborhood(g, v)).as_set()
    rhs = {s for s in enumerate_cutsets(g) if v not in s}
    diff = lhs ^ rhs
    return CheckResult("gprime", g, v, not diff, _first(diff))


def verify_h_cutsets(g: Graph, v: int, require_good: bool = True) -> CheckResult:
    """C(H) == {S in C(G) : v not in S and N(v) not inside S}, for good v."""
    _require_cut_vertex(g, v)
    if require_good and not satisfies_dagger(g, v):
        raise GraphError(f"vertex {v} does not satisfy the dagger property")
    h = delete_vertex(complete_neighborhood(g, v), v)
    nv = set(g.adj[v])
    lhs = enumerate_cutsets(h).as_set()
    rhs = {s for s in enumerate_cutsets(g) if v not in s and not nv <= set(s)}
    diff = lhs ^ rhs
    return CheckResult("h", g, v, not diff, _first(diff))


def verify_sepset_containment(g: Graph, v: int) -> CheckResult:
    """Every S in C(H) containing N_G(v) is in C(G - v)."""
    _require_cut_vertex(g, v, need_block=False)
    t = build_triple(g, v)
    nv = set(g.adj[v])
    cg2 = enumerate_cutsets(t.g_dprime).as_set()
    bad = [s for s in enumerate_cutsets(t.h) if nv <= set(s) and s not in cg2]
    checked = sum(1 for s in enumerate_cutsets(t.h) if nv <= set(s))
    return CheckResult("containment", g, v, not bad, bad[0] if bad else None, {"checked": checked})


def verify_path_equivalence(g: Graph, v: int) -> CheckResult:
    """Reachability agrees in G, G_v and G_v - v for every S avoiding v."""
    _require_cut_vertex(g, v, need_block=False)
    t = build_triple(g, v)
    others = [u for u in g.vertices if u != v]
    for r in range(len(others) + 1):
        for s in combinations(others, r):
            rest = [u for u in others if u not in s]
            for a, b in combinations(rest, 2):
                r1 = reachable(g, s, a, b)
                r2 = reachable(t.g_prime, s, a, b)
                r3 = reachable(t.h, s, a, b)
                if not r1 == r2 == r3:
                    return CheckResult("path", g, v, False, {"S": list(s), "a": a, "b": b})
    return CheckResult("path", g, v, True)


def verify_component_counts(g: Graph, v: int) -> CheckResult:
    """c_G(S) == c_H(S) for every S in C(H) (v good)."""
    _require_cut_vertex(g, v)
    h = delete_vertex(complete_neighborhood(g, v), v)
    for s in enumerate_cutsets(h):
        if component_count(g, s) != component_count(h, s):
            return CheckResult("component_counts", g, v, False, s)
    return CheckResult("component_counts", g, v, True)
