"""
cone.py
F_q(C(P)) as the sum over flags of ideals, and what is read off it

    F_q(C(P)) = Σ_{F flag of ideals} q^{rk_P(F)} M_{type(F)}
"""

from functools import lru_cache
from typing import Callable, Iterator

from ..errors import WeightError
from ..poset import (
    IdealFlag,
    Poset,
    block_quotient,
    block_rank,
    ideal_flags,
    ideals,
    opposite,
    rank,
    restriction,
)
from ..qsym import (
    QRING,
    Composition,
    QPoly,
    QSymFunction,
    accumulate,
    antipode,
    principal_specialization,
    q_power,
    qsym_character,
    reverse_map,
    scale_q,
    substitute_q,
)

Character = Callable[[Poset], QPoly]


@lru_cache(maxsize=4096)
def fq_poset_cone(P: Poset) -> QSymFunction:
    """Ψ_q([P]); homogeneous of weight n, M_∅ for the empty poset"""
    terms = {}
    for flag in ideal_flags(P):
        accumulate(terms, flag.type, q_power(block_rank(P, flag)))
    return QSymFunction(terms)


def zeta_coefficient(P: Poset, alpha) -> QPoly:
    """(ζ_q)_α(P): the coefficient of M_α in F_q(C(P))"""
    alpha = Composition(alpha)
    if sum(alpha) != P.n:
        raise WeightError(f"composition {alpha} has weight {sum(alpha)}, poset has n={P.n}")
    return fq_poset_cone(P).coefficient(alpha)


# ==================== CHARACTERS ====================

def rank_character(P: Poset) -> QPoly:
    """ζ_q([P]) = q^{rk(P)}"""
    return q_power(rank(P))


def discrete_character(P: Poset) -> QPoly:
    """ζ_0: 1 on posets without relations, 0 otherwise"""
    return QRING.one if not P.less_than else QRING.zero


def universal_morphism(P: Poset, character: Character) -> QSymFunction:
    """
    Ψ_ζ([P]) = Σ_F Π_j ζ(P|_{B_j}) M_{type(F)} for a multiplicative
    character ζ given on single posets.
    """
    terms = {}
    for flag in ideal_flags(P):
        coeff = QRING.one
        for block in flag.blocks:
            coeff *= character(restriction(P, block))
            if not coeff:
                break
        accumulate(terms, flag.type, coeff)
    return QSymFunction(terms)


def zeta_coefficient_via_coproduct(P: Poset, alpha) -> QPoly:
    """
    ζ_α(P) through the iterated coproduct of the poset Hopf algebra:
    split off an ideal of size α_1, apply ζ_q to it, recurse on the rest.
    """
    alpha = Composition(alpha)
    if sum(alpha) != P.n:
        raise WeightError(f"composition {alpha} has weight {sum(alpha)}, poset has n={P.n}")
    if not alpha:
        return QRING.one

    everything = frozenset(P.elements)
    total = QRING.zero
    for S in ideals(P):
        if len(S) != alpha[0]:
            continue
        head = rank_character(restriction(P, S))
        total += head * zeta_coefficient_via_coproduct(restriction(P, everything - S), alpha[1:])
    return total


def character_check(P: Poset) -> bool:
    """ζ_Q(Ψ_q([P])) = ζ_q([P])"""
    return qsym_character(fq_poset_cone(P)) == rank_character(P)


# ==================== q = 0 ====================

def discrete_flags(P: Poset) -> Iterator[IdealFlag]:
    """Flags whose quotient P/F has no relations"""
    for flag in ideal_flags(P):
        if block_quotient(P, flag).is_discrete:
            yield flag


def f0(P: Poset) -> QSymFunction:
    """F(P) = F_0(C(P)) = Σ_{P/F discrete} M_{type(F)}"""
    terms = {}
    for flag in discrete_flags(P):
        accumulate(terms, flag.type, QRING.one)
    return QSymFunction(terms)


# ==================== f-POLYNOMIAL ====================

@lru_cache(maxsize=4096)
def f_polynomial(P: Poset) -> QPoly:
    """
    Face-count polynomial Σ f_i q^i of C(P).

    Prefactor is (-1)^n; with ps¹(M_α)(-1) = (-1)^{k(α)} a prefactor of
    (-1)^{n-1} would give f(chain(2)) = -1 - q.
    """
    sign = -1 if P.n % 2 else 1
    return principal_specialization(substitute_q(fq_poset_cone(P), -1), -1) * sign


# ==================== ANTIPODE / OPPOSITE ====================

def antipode_rhs(P: Poset) -> QSymFunction:
    """(-1)^n Σ_G f(C(P/G), -q) M_{type(G^op)}"""
    sign = -1 if P.n % 2 else 1
    terms = {}
    for flag in ideal_flags(P):
        face = block_quotient(P, flag).as_poset()
        coeff = scale_q(f_polynomial(face), -1) * sign
        accumulate(terms, flag.opposite().type, coeff)
    return QSymFunction(terms)


def antipode_identity_check(P: Poset) -> bool:
    return antipode(fq_poset_cone(P)) == antipode_rhs(P)


def opposite_identity_check(P: Poset) -> bool:
    """F_q(C(P^op)) = rev(F_q(C(P)))"""
    return fq_poset_cone(opposite(P)) == reverse_map(fq_poset_cone(P))
