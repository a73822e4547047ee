"""Real Schur roots, clusters and support tilting posets of acyclic quivers.

The package computes the extension invariant of dimension-vector pairs from
the Euler form alone, identifies real Schur roots (exactly in the Dynkin
case, by seeded sampling otherwise), enumerates the compatibility clusters
they generate together with negative simples, orders the clusters, and
cross-checks that order against one built from explicit exceptional
representations over the rationals.  Finite posets and monotone-map counting
round out the toolkit.
"""

from . import errors
from .clusters import (
    ClusterPoset,
    Enumeration,
    cluster_geq,
    cluster_leq,
    cluster_poset,
    cluster_variables,
    compatible,
    complete_to_cluster,
    enumerate_clusters,
    enumerate_clusters_naive,
    enumerate_preclusters,
    format_variable,
    is_positive_precluster,
    is_precluster,
    negative_simple,
)
from .einv import (
    SchurCheck,
    e_cache_stats,
    e_invariant,
    e_invariant_alt,
    generic_summands,
    is_real_schur_root,
    real_schur_roots,
)
from .posets import (
    FinitePoset,
    antichain,
    as_finite_poset,
    build_poset,
    chain,
    count_monotone_maps,
    covers_of,
    enumerate_monotone_maps,
    is_monotone,
    map_poset_leq,
    torsion_class_count,
)
from .quiver import (
    DimVec,
    Quiver,
    RootSet,
    euler_form,
    positive_real_roots,
    projective_dimension_vectors,
    reflect,
    sym_form,
    tits_form,
    validate_quiver,
)
from .reps import (
    ModuleList,
    Representation,
    compare_posets,
    ext_dim,
    gen_leq,
    hom_basis,
    hom_dim,
    is_support_tilting,
    make_representation,
    realize_cluster,
    sample_exceptional,
    stilt_poset,
    zero_representation,
)

__version__ = "0.1.0"

__all__ = [
    "ClusterPoset",
    "DimVec",
    "Enumeration",
    "FinitePoset",
    "ModuleList",
    "Quiver",
    "Representation",
    "RootSet",
    "SchurCheck",
    "antichain",
    "as_finite_poset",
    "build_poset",
    "chain",
    "cluster_geq",
    "cluster_leq",
    "cluster_poset",
    "cluster_variables",
    "compare_posets",
    "compatible",
    "complete_to_cluster",
    "count_monotone_maps",
    "covers_of",
    "e_cache_stats",
    "e_invariant",
    "e_invariant_alt",
    "enumerate_clusters",
    "enumerate_clusters_naive",
    "enumerate_monotone_maps",
    "enumerate_preclusters",
    "errors",
    "euler_form",
    "ext_dim",
    "format_variable",
    "gen_leq",
    "generic_summands",
    "hom_basis",
    "hom_dim",
    "is_monotone",
    "is_positive_precluster",
    "is_precluster",
    "is_real_schur_root",
    "is_support_tilting",
    "make_representation",
    "map_poset_leq",
    "negative_simple",
    "positive_real_roots",
    "projective_dimension_vectors",
    "real_schur_roots",
    "realize_cluster",
    "reflect",
    "sample_exceptional",
    "stilt_poset",
    "sym_form",
    "tits_form",
    "torsion_class_count",
    "validate_quiver",
    "zero_representation",
]
