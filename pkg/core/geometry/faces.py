"""
faces.py
Face lattice of C(P) from quotients, cross-checked against positive subposets
"""

from collections import defaultdict
from itertools import combinations
from typing import Dict, List, Tuple

from ..errors import SizeError
from ..poset import (
    Poset,
    SubposetRelation,
    block_quotient,
    ideal_flags,
    is_positive_subposet,
    rank,
)
from ..poset.poset import is_transitively_closed
from ..qsym import QPoly, from_coefficients

MAX_SUBPOSET_N = 4

Face = Tuple[SubposetRelation, int]


def _faces_with_flags(P: Poset) -> Dict[SubposetRelation, List]:
    grouped: Dict[SubposetRelation, List] = defaultdict(list)
    for flag in ideal_flags(P):
        grouped[block_quotient(P, flag)].append(flag)
    return grouped


def face_lattice(P: Poset) -> List[Face]:
    """Distinct quotients P/F with dim = n - c(P/F), by dimension then relations"""
    faces = [(Q, rank(Q)) for Q in _faces_with_flags(P)]
    faces.sort(key=lambda face: (face[1], face[0].sorted_relations()))
    return faces


def f_vector(P: Poset) -> List[int]:
    """[f_0, f_1, ..., f_dim]"""
    faces = face_lattice(P)
    top = max(dim for _, dim in faces)
    counts = [0] * (top + 1)
    for _, dim in faces:
        counts[dim] += 1
    return counts


def f_vector_polynomial(P: Poset) -> QPoly:
    return from_coefficients(f_vector(P))


def positive_subposet_cross_check(P: Poset) -> bool:
    """{P/F} equals the set of transitively closed positive subposets"""
    if P.n > MAX_SUBPOSET_N:
        raise SizeError(f"positive-subposet enumeration is exhaustive, n <= {MAX_SUBPOSET_N} (got {P.n})")

    relations = P.sorted_relations()
    positive = set()
    for size in range(len(relations) + 1):
        for subset in combinations(relations, size):
            pairs = frozenset(subset)
            if not is_transitively_closed(pairs):
                continue
            Q = SubposetRelation(P.n, pairs)
            if is_positive_subposet(P, Q):
                positive.add(Q)
    return positive == set(_faces_with_flags(P))


def euler_flag_identity(P: Poset) -> bool:
    """
    For each face Q: Σ_{F: P/F = Q} (-1)^{#blocks(F)} = (-1)^{n - dim C(Q)}.

    Exponent n - dim, not n - 1 - dim: on chain(2) the single one-block
    flag gives -1 = (-1)^{2-1}.
    """
    for Q, flags in _faces_with_flags(P).items():
        total = sum(-1 if flag.length % 2 else 1 for flag in flags)
        expected = -1 if (P.n - rank(Q)) % 2 else 1
        if total != expected:
            return False
    return True
