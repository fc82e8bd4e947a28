"""
Poset Module - posets on {1..n}, flags of ideals, canonical forms
"""

from .poset import (
    Poset,
    SubposetRelation,
    poset_from_relations,
    is_ideal,
    ideals,
    ideal_blocks,
    covers,
    maximal_elements,
    minimal_elements,
    connected_components,
    is_connected,
    rank,
    is_tree_hasse,
    restriction,
    linear_extensions,
    relabel,
    is_well_labelled,
    well_labelling,
)
from .flags import (
    IdealFlag,
    flag_of,
    ideal_flags,
    count_ideal_flags,
    quotient,
    block_quotient,
    rank_of_flag,
    block_rank,
    poset_coproduct,
)
from .constructors import (
    antichain,
    chain,
    star,
    complete_bipartite,
    disjoint_union,
    series_composition,
    opposite,
    random_relabel,
    random_poset,
    random_tree_poset,
)
from .positivity import circuits, is_positive_subposet
from .canonical import canonical_form, from_canonical_form, is_isomorphic, all_posets

__all__ = [
    "Poset",
    "SubposetRelation",
    "poset_from_relations",
    "is_ideal",
    "ideals",
    "ideal_blocks",
    "covers",
    "maximal_elements",
    "minimal_elements",
    "connected_components",
    "is_connected",
    "rank",
    "is_tree_hasse",
    "restriction",
    "linear_extensions",
    "relabel",
    "is_well_labelled",
    "well_labelling",
    "IdealFlag",
    "flag_of",
    "ideal_flags",
    "count_ideal_flags",
    "quotient",
    "block_quotient",
    "rank_of_flag",
    "block_rank",
    "poset_coproduct",
    "antichain",
    "chain",
    "star",
    "complete_bipartite",
    "disjoint_union",
    "series_composition",
    "opposite",
    "random_relabel",
    "random_poset",
    "random_tree_poset",
    "circuits",
    "is_positive_subposet",
    "canonical_form",
    "from_canonical_form",
    "is_isomorphic",
    "all_posets",
]
