"""Binomial edge ideals: cut sets, minimal primes and local cohomology of block graphs."""

__version__ = "0.1.0"

from .blocks import (
    NotBlockGraphError,
    SurgeryTriple,
    TheoremViolation,
    build_triple,
    find_extremal_leaf_clique,
    find_good_cut_vertex,
    good_cut_vertex_constructive,
    satisfies_dagger,
    verify_gprime_cutsets,
    verify_h_cutsets,
    verify_path_equivalence,
    verify_sepset_containment,
)
from .cohomology import CohomologyProfile, cohomology_profile, depth_check, explain
from .cutsets import CutSetFamily, cut_set_witness, enumerate_cutsets, is_cut_set, reachable
from .graph import (
    BlockDecomposition,
    Graph,
    GraphError,
    Graph6Error,
    block_decomposition,
    complete_neighborhood,
    components,
    delete_vertex,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from .oracle import verify_ohtani, verify_primary_decomposition
from .primes import MinimalPrime, PrimeDecomposition, associated_primes, bei_generators, generators, prime_of_cutset
