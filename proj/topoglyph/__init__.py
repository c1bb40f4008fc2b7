"""Rotation systems, pseudochord arrangements, and simple topological drawings.

Thin re-export of the compiled extension.  Structured objects (drawings,
spanning trees, T-representations, arrangements) travel as JSON strings in
the same schemas the `topoglyph` CLI reads and writes; rotation systems are
plain lists of per-vertex rotations.
"""

from ._topoglyph import (
    alpha_d,
    arr_decode,
    arr_encode,
    arr_enumerate,
    arrangement_bound,
    at_graph,
    chord_counts,
    classify_quadruple,
    convex,
    cross_variance,
    crossing_pairs_complete,
    enumerate_good,
    extend_good,
    find_partition,
    from_points,
    inverse_ackermann,
    is_good,
    is_isomorphic,
    is_realizable4,
    k2n_family_size,
    mullin_schellenberg,
    read_bound,
    spanning_tree,
    t_representation,
    tutte_maps,
    twisted,
    validate_drawing,
    walsh_lehman_loopless,
    weak_iso,
)

__all__ = [
    "alpha_d",
    "arr_decode",
    "arr_encode",
    "arr_enumerate",
    "arrangement_bound",
    "at_graph",
    "chord_counts",
    "classify_quadruple",
    "convex",
    "cross_variance",
    "crossing_pairs_complete",
    "enumerate_good",
    "extend_good",
    "find_partition",
    "from_points",
    "inverse_ackermann",
    "is_good",
    "is_isomorphic",
    "is_realizable4",
    "k2n_family_size",
    "mullin_schellenberg",
    "read_bound",
    "spanning_tree",
    "t_representation",
    "tutte_maps",
    "twisted",
    "validate_drawing",
    "walsh_lehman_loopless",
    "weak_iso",
]
