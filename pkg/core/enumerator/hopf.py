"""
hopf.py
Ψ_q is a morphism of graded Hopf algebras: product and coproduct checks
"""

from ..poset import Poset, disjoint_union, poset_coproduct
from ..qsym import coproduct, quasi_shuffle, tensor, tensor_sum
from .cone import fq_poset_cone


def product_check(P1: Poset, P2: Poset) -> bool:
    """F_q(P1 ⊔ P2) = F_q(P1) · F_q(P2)"""
    return fq_poset_cone(disjoint_union(P1, P2)) == quasi_shuffle(fq_poset_cone(P1), fq_poset_cone(P2))


def coproduct_check(P: Poset) -> bool:
    """Δ F_q(P) = Σ_{S ideal} F_q(P|_S) ⊗ F_q(P|_{S^c})"""
    expected = tensor_sum(
        tensor(fq_poset_cone(lower), fq_poset_cone(upper))
        for lower, upper in poset_coproduct(P)
    )
    return coproduct(fq_poset_cone(P)) == expected


def hopf_morphism_checks(P1: Poset, P2: Poset) -> bool:
    return product_check(P1, P2) and coproduct_check(P1) and coproduct_check(P2)
