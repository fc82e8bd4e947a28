"""
recursions.py
Series-composition and maximal-element recursions for F(P)
"""

from itertools import combinations
from typing import Dict, Hashable

from ..errors import ConnectivityError
from ..poset import Poset, is_connected, maximal_elements, restriction, series_composition
from ..poset.canonical import MAX_CANONICAL_N, canonical_form
from ..qsym import QSymFunction, append, concat_product
from .cone import f0


def series_identity_check(*posets: Poset) -> bool:
    """F(P_1 * ... * P_k) = F(P_1) ∘ ... ∘ F(P_k)"""
    if not posets:
        return True
    stacked = posets[0]
    composed = f0(posets[0])
    for P in posets[1:]:
        stacked = series_composition(stacked, P)
        composed = concat_product(composed, f0(P))
    return f0(stacked) == composed


def _memo_key(P: Poset) -> Hashable:
    # F(P) is an isomorphism invariant
    return canonical_form(P) if P.n <= MAX_CANONICAL_N else P


def _max_recursion(P: Poset, memo: Dict[Hashable, QSymFunction]) -> QSymFunction:
    if P.n == 0:
        return QSymFunction.one()
    key = _memo_key(P)
    if key in memo:
        return memo[key]

    everything = frozenset(P.elements)
    tops = sorted(maximal_elements(P))
    result = QSymFunction.zero()
    for size in range(1, len(tops) + 1):
        for removed in combinations(tops, size):
            rest = restriction(P, everything - set(removed))
            result = result + append(_max_recursion(rest, memo), size)

    memo[key] = result
    return result


def max_recursion(P: Poset) -> QSymFunction:
    """
    F(P) = Σ_{∅ ≠ A ⊆ Max(P)} (F(P|_{[n]∖A}))_{|A|}

    Stated for connected P; restrictions met during the recursion may be
    disconnected and are expanded by the same rule.
    """
    if not is_connected(P):
        raise ConnectivityError(f"max_recursion needs a connected poset, got {P!r}")
    return _max_recursion(P, {})
