"""Minimal primes P_S(G) of binomial edge ideals, kept symbolic.

P_S(G) is (x_i, y_i : i in S) plus the binomial edge ideal of the complete
graph on each component of G - S. Heights come from |S| + n - c(S);
generators are only materialised when the Groebner oracle needs them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .cutsets import DEFAULT_BOUND, enumerate_cutsets, is_cut_set
from .graph import Graph, GraphError, VertexSet, components, vset
from .groebner import DEFAULT_PRIME, Polynomial, Ring


def bei_ring(labels, p: int = DEFAULT_PRIME, order: str = "degrevlex") -> Ring:
    """k[x_v, y_v : v in labels] with x's before y's."""
    labels = vset(labels)
    return Ring([f"x{v}" for v in labels] + [f"y{v}" for v in labels], p, order)


def delta(ring: Ring, a: int, b: int) -> Polynomial:
    """x_a*y_b - x_b*y_a."""
    n = ring.nvars
    ia, ib = ring.index(f"x{a}"), ring.index(f"x{b}")
    ja, jb = ring.index(f"y{a}"), ring.index(f"y{b}")
    m1 = [0] * n
    m1[ia] = m1[jb] = 1
    m2 = [0] * n
    m2[ib] = m2[ja] = 1
    return Polynomial(ring, {tuple(m1): 1, tuple(m2): -1})


@dataclass(frozen=True)
class MinimalPrime:
    s: VertexSet
    components: tuple
    height: int
    dimension: int
    ambient: VertexSet = field(compare=False)

    @property
    def ambient_n(self) -> int:
        return len(self.ambient)

    def to_dict(self) -> dict:
        return {
            "S": list(self.s),
            "components": [list(c) for c in self.components],
            "height": self.height,
            "dimension": self.dimension,
        }

    def __str__(self):
        comps = ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.components)
        return f"P_{{{','.join(map(str, self.s))}}} [components {comps}; height {self.height}, dim {self.dimension}]"


@dataclass(frozen=True)
class PrimeDecomposition:
    graph: Graph
    primes: tuple

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def heights(self):
        return [p.height for p in self.primes]

    def is_unmixed(self) -> bool:
        return len(set(self.heights())) <= 1

    def to_list(self) -> list:
        return [p.to_dict() for p in self.primes]


def prime_of_cutset(g: Graph, s, enforce: bool = True) -> MinimalPrime:
    """Symbolic P_S(g). With ``enforce`` off, any vertex subset is accepted."""
    s = vset(s)
    missing = [v for v in s if v not in g]
    if missing:
        raise GraphError(f"vertices {missing} are not in the graph")
    if enforce and not is_cut_set(g, s):
        raise GraphError(f"{list(s)} is not in the cut-set family C(G)")
    comps = tuple(components(g, s))
    n = g.n
    height = len(s) + n - len(comps)
    return MinimalPrime(s, comps, height, 2 * n - height, g.vertices)


def associated_primes(g: Graph, bound: int = DEFAULT_BOUND) -> PrimeDecomposition:
    """One P_S(g) per S in C(g), in cut-set family order."""
    family = enumerate_cutsets(g, bound)
    return PrimeDecomposition(g, tuple(prime_of_cutset(g, s, enforce=False) for s in family))


def generators(prime: MinimalPrime, ring: Ring | None = None) -> list:
    """x_i, y_i for i in S (by index), then every delta inside each component."""
    ring = ring or bei_ring(prime.ambient)
    gens = [ring.var(f"x{i}") for i in prime.s] + [ring.var(f"y{i}") for i in prime.s]
    pairs = sorted(pair for comp in prime.components for pair in combinations(comp, 2))
    gens.extend(delta(ring, a, b) for a, b in pairs)
    return gens


def bei_generators(g: Graph, ring: Ring | None = None) -> list:
    """Binomial edge ideal generators, one per edge in edge order."""
    ring = ring or bei_ring(g.vertices)
    return [delta(ring, a, b) for a, b in g.edges]
