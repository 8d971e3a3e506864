"""Exact combinatorics of increasing-map-invariant chains of edge ideals.

The package computes, classifies and certifies the eventual regularity of
such chains: window expansion and orbit witnesses, exact graph algorithms
(chordality, induced matchings, induced cycles), a homology-based regularity
oracle, greedy anticycle constructions, and the limit-regularity classifier
with explicit stabilization thresholds.
"""

from . import errors
from .anticycle import (
    AnticycleTrace,
    JTrace,
    KTrace,
    build_J_sets,
    build_K_sets,
    construct_anticycle,
    final_vertices,
    initial_vertices,
)
from .chain import (
    ChainIndices,
    ChainSpec,
    IncMapWitness,
    Triangle,
    chain_indices,
    derived_chain,
    expand,
    is_quasi_saturated,
    msupp,
    normalize_spec,
    orbit_witness,
    q_invariant,
    reduce_index,
    triangle_contains,
)
from .classify import (
    ClassifierVerdict,
    limit_indmatch,
    limit_regularity,
    stabilization_threshold,
    sweep_verify,
)
from .graphs import (
    AnticycleWitness,
    SimpleGraph,
    complement,
    enumerate_induced_cycles,
    find_induced_kK2,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    is_cochordal,
    verify_anticycle,
)
from .oracle import (
    HomologyProfile,
    RegularityReport,
    reduced_homology_ranks,
    regularity,
    regularity_bounds,
)
from .randspec import generate_random_spec

__version__ = "0.1.0"
