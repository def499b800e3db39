"""Finite magmas, zero magmas and finite (pre)categories.

Enumerates homomorphisms, submagmas, functors and subprecategories, builds
the corresponding elementary gradings and filters on magma and category
algebras, verifies the grading axioms exactly, and cross-checks closed
counting formulas against brute force.
"""

from .budget import Budget, DEFAULT_BUDGET
from .errors import (
    BadCompositionError,
    BadIdentityError,
    BasisMismatchError,
    IndexOutOfRangeError,
    MissingZeroError,
    NotAbsorbingError,
    NotACategoryError,
    NotAGroupError,
    NotAssociativeError,
    ParseError,
    ReductionMismatchError,
    SizeOverflowError,
    ToolkitError,
    ValidationError,
)
from .magma import (
    FiniteMagma,
    PairRelation,
    abelian_group_magma,
    are_isomorphic,
    canonical_form,
    census,
    closure,
    cyclic_group_magma,
    enumerate_homs,
    enumerate_product_submagmas,
    enumerate_submagmas,
    enumerate_zero_homs,
    enumerate_zero_submagmas,
    graph_relation,
    magma_from_word,
    matrix_unit_zero_magma,
    product_magma,
    validate_magma,
    with_zero_adjoined,
    word_of_magma,
)
from .category import (
    FinitePrecategory,
    MorphismMap,
    adjoin_zero,
    compose_morphism_maps,
    connected_components,
    connected_groupoid,
    disjoint_union,
    enumerate_functors,
    enumerate_prefunctors,
    enumerate_prefunctors_via_zero_homs,
    enumerate_subprecategories,
    enumerate_subprecategory_pairs,
    group_as_category,
    identity_morphism_map,
    is_connected,
    is_functor,
    is_groupoid,
    is_prefunctor,
    is_thin,
    matrix_groupoid,
    product_category,
    subprecategory_pairs_via_zero_submagmas,
    validate_precategory,
    vertex_group_table,
)
from .algebra import (
    RING_ZERO,
    AlgebraPresentation,
    ElementaryFamily,
    Verdict,
    base_family,
    category_algebra,
    contracted_algebra,
    enumerate_category_filters,
    enumerate_category_gradings,
    enumerate_elementary_filters,
    enumerate_elementary_gradings,
    enumerate_nonzero_elementary_filters,
    enumerate_nonzero_elementary_gradings,
    grading_from_relation,
    is_elementary,
    is_filter,
    is_grading,
    is_nonzero,
    is_strong,
    magma_algebra,
    relation_from_filter,
)
from .counting import (
    CountReport,
    abelian_homs_report,
    count_abelian_homs,
    count_disconnected,
    count_functors_connected_groupoids,
    count_groupoid_gradings_as_printed,
    count_matrix_group_gradings,
    count_subspaces,
    count_surjective_functions,
    matrix_group_gradings_report,
    subspaces_report,
    surjective_functions_report,
)
