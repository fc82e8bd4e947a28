"""
QSym Module - quasisymmetric functions over Z[q]
"""

from .qpoly import (
    QRING,
    QPoly,
    q,
    as_qpoly,
    from_coefficients,
    q_power,
    coefficients,
    degree,
    scale_q,
    format_qpoly,
)
from .compositions import (
    Composition,
    sort_key,
    descent_set,
    composition_from_descents,
    refines,
    reverse,
    compositions,
    compositions_of_length,
    coarsenings,
    refinements,
)
from .functions import (
    QSymFunction,
    QSymTensor,
    accumulate,
    format_function,
    format_terms,
    quasi_shuffle,
    power,
    concat_product,
    append,
    coproduct,
    tensor,
    tensor_sum,
    counit,
    antipode,
    antipode_axiom_holds,
    qsym_character,
    fundamental_to_monomial,
    monomial_to_fundamental,
    binomial,
    principal_specialization,
    substitute_q,
    reverse_map,
)
from .expansion import TruncatedExpansion, truncate, format_monomial

__all__ = [
    "QRING",
    "QPoly",
    "q",
    "as_qpoly",
    "from_coefficients",
    "q_power",
    "coefficients",
    "degree",
    "scale_q",
    "format_qpoly",
    "Composition",
    "sort_key",
    "descent_set",
    "composition_from_descents",
    "refines",
    "reverse",
    "compositions",
    "compositions_of_length",
    "coarsenings",
    "refinements",
    "QSymFunction",
    "QSymTensor",
    "accumulate",
    "format_function",
    "format_terms",
    "quasi_shuffle",
    "power",
    "concat_product",
    "append",
    "coproduct",
    "tensor",
    "tensor_sum",
    "counit",
    "antipode",
    "antipode_axiom_holds",
    "qsym_character",
    "fundamental_to_monomial",
    "monomial_to_fundamental",
    "binomial",
    "principal_specialization",
    "substitute_q",
    "reverse_map",
    "TruncatedExpansion",
    "truncate",
    "format_monomial",
]
