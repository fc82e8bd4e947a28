"""
Enumerator Module - F_q(C(P)), F(P), f-polynomials, P-partitions, identities
"""

from .cone import (
    fq_poset_cone,
    zeta_coefficient,
    rank_character,
    discrete_character,
    universal_morphism,
    zeta_coefficient_via_coproduct,
    character_check,
    discrete_flags,
    f0,
    f_polynomial,
    antipode_rhs,
    antipode_identity_check,
    opposite_identity_check,
)
from .closed_forms import (
    closed_form_star,
    closed_form_chain,
    closed_form_bipartite,
    bipartite_f_polynomial,
    tree_f_polynomial,
)
from .ppartitions import (
    is_ppartition,
    ppartitions_bruteforce,
    ppartitions_via_extensions,
    extension_descents,
)
from .recursions import series_identity_check, max_recursion
from .hopf import product_check, coproduct_check, hopf_morphism_checks

__all__ = [
    "fq_poset_cone",
    "zeta_coefficient",
    "rank_character",
    "discrete_character",
    "universal_morphism",
    "zeta_coefficient_via_coproduct",
    "character_check",
    "discrete_flags",
    "f0",
    "f_polynomial",
    "antipode_rhs",
    "antipode_identity_check",
    "opposite_identity_check",
    "closed_form_star",
    "closed_form_chain",
    "closed_form_bipartite",
    "bipartite_f_polynomial",
    "tree_f_polynomial",
    "is_ppartition",
    "ppartitions_bruteforce",
    "ppartitions_via_extensions",
    "extension_descents",
    "series_identity_check",
    "max_recursion",
    "product_check",
    "coproduct_check",
    "hopf_morphism_checks",
]
