"""
ppartitions.py
P-partition generating functions of labelled posets

The integer labels double as the second order: for i <_P j,
f(i) <= f(j) when i < j as integers and f(i) < f(j) when i > j.
"""

from itertools import product

from ..poset import Poset, linear_extensions
from ..qsym import QSymFunction, TruncatedExpansion, composition_from_descents, fundamental_to_monomial


def is_ppartition(P: Poset, values) -> bool:
    """`values[i-1]` is f(i)"""
    for i, j in P.less_than:
        fi, fj = values[i - 1], values[j - 1]
        if i < j and fi > fj:
            return False
        if i > j and fi >= fj:
            return False
    return True


def ppartitions_bruteforce(P: Poset, m: int) -> TruncatedExpansion:
    """Σ over P-partitions f: [n] -> [m] of x_{f(1)} ... x_{f(n)}"""
    result = TruncatedExpansion(m)
    for values in product(range(1, m + 1), repeat=P.n):
        if not is_ppartition(P, values):
            continue
        exps = [0] * m
        for v in values:
            exps[v - 1] += 1
        result.add_term(exps)
    return result


def extension_descents(extension) -> set:
    """{j : i_j > i_{j+1}}"""
    return {j for j in range(1, len(extension)) if extension[j - 1] > extension[j]}


def ppartitions_via_extensions(P: Poset) -> QSymFunction:
    """Σ_{l linear extension} L_{α(l)}, expanded in the monomial basis"""
    result = QSymFunction.zero()
    for extension in linear_extensions(P):
        alpha = composition_from_descents(P.n, extension_descents(extension))
        result = result + fundamental_to_monomial(alpha)
    return result
