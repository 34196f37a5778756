"""Groebner-basis checks of the ideal-theoretic identities on small graphs."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .graph import Graph, GraphError, complete_neighborhood, cut_vertices, delete_vertex, emit_graph6
from .groebner import DEFAULT_PRIME, Ideal, ideal_equal, intersect
from .primes import associated_primes, bei_generators, bei_ring, generators

ORACLE_BOUND = 5


class OracleBoundError(GraphError):
    pass


@dataclass
class OracleReport:
    check: str
    graph: Graph
    prime: int
    holds: bool
    v: int | None = None
    timings: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {"property": self.check, "graph": emit_graph6(self.graph), "v": self.v, "prime": self.prime,
                "holds": self.holds, "timings": [round(t, 4) for t in self.timings], **self.details}


def _check_bound(g, bound):
    if g.n > bound:
        raise OracleBoundError(f"graph has {g.n} vertices; oracle bound is {bound}")


def bei_ideal(g: Graph, ring) -> Ideal:
    return Ideal(ring, bei_generators(g, ring))


def variable_pair(ring, v) -> Ideal:
    return Ideal(ring, [ring.var(f"x{v}"), ring.var(f"y{v}")])


def verify_primary_decomposition(g: Graph, prime: int = DEFAULT_PRIME, bound: int = ORACLE_BOUND) -> OracleReport:
    """J(G) equals the intersection of P_S(G) over S in C(G)."""
    _check_bound(g, bound)
    ring = bei_ring(g.vertices, prime)
    primes = associated_primes(g)
    timings = []
    acc = None
    for p in primes:
        ideal = Ideal(ring, generators(p, ring))
        t0 = time.perf_counter()
        acc = ideal if acc is None else intersect(acc, ideal)
        timings.append(time.perf_counter() - t0)
    t0 = time.perf_counter()
    holds = ideal_equal(acc, bei_ideal(g, ring))
    timings.append(time.perf_counter() - t0)
    return OracleReport("decomposition", g, prime, holds, timings=timings,
                        details={"primes": len(primes)})


def verify_ohtani(g: Graph, v: int, prime: int = DEFAULT_PRIME, bound: int = ORACLE_BOUND) -> OracleReport:
    """J_G = J_{G_v} ∩ (J_G + (x_v, y_v)) and J_{G_v} + J_G + (x_v, y_v) = J_H + (x_v, y_v)."""
    _check_bound(g, bound)
    if v not in cut_vertices(g):
        raise GraphError(f"vertex {v} is not a cut vertex")
    ring = bei_ring(g.vertices, prime)
    gp = complete_neighborhood(g, v)
    h = delete_vertex(gp, v)
    gdp = delete_vertex(g, v)
    jg = bei_ideal(g, ring)
    q1 = bei_ideal(gp, ring)
    xy = variable_pair(ring, v)
    q2 = bei_ideal(gdp, ring) + xy
    q3 = bei_ideal(h, ring) + xy
    t0 = time.perf_counter()
    split = ideal_equal(jg, intersect(q1, jg + xy))
    t1 = time.perf_counter()
    gluing = ideal_equal(q1 + jg + xy, q3)
    t2 = time.perf_counter()
    q2_form = ideal_equal(jg + xy, q2)
    t3 = time.perf_counter()
    return OracleReport("ohtani", g, prime, split and gluing and q2_form, v=v,
                        timings=[t1 - t0, t2 - t1, t3 - t2],
                        details={"splitting": split, "sum": gluing, "q2": q2_form})
