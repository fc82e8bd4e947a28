"""
canonical.py
Brute-force canonical forms and isomorphism-class generation for small n
"""

from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterator, List, Sequence, Tuple

from ..errors import SizeError
from .poset import Poset, ideals

MAX_CANONICAL_N = 8
MAX_CLASSES_N = 6


def _relabelings(P: Poset) -> Iterator[Sequence[int]]:
    """
    Orderings of the ground set that respect the (|below|, |above|)
    signature. The signature is an isomorphism invariant, so minimising
    over these orderings only is still canonical.
    """
    groups: Dict[Tuple[int, int], List[int]] = {}
    for v in P.elements:
        groups.setdefault((len(P.below(v)), len(P.above(v))), []).append(v)
    ordered = [groups[key] for key in sorted(groups)]
    for choice in product(*(permutations(g) for g in ordered)):
        yield [v for part in choice for v in part]


def canonical_form(P: Poset) -> bytes:
    """
    Minimum relation-matrix encoding over the relabelings; equal exactly
    for isomorphic posets.
    """
    if P.n > MAX_CANONICAL_N:
        raise SizeError(f"canonical_form is brute force, n <= {MAX_CANONICAL_N} (got {P.n})")

    rels = P.less_than
    best = None
    for order in _relabelings(P):
        code = tuple(1 if (a, b) in rels else 0 for a in order for b in order)
        if best is None or code < best:
            best = code
    return bytes([P.n]) + bytes(best or ())


def from_canonical_form(code: bytes) -> Poset:
    """The representative poset spelled out by a canonical code"""
    n = code[0]
    bits = code[1:]
    return Poset(
        n,
        frozenset(
            (a + 1, b + 1) for a in range(n) for b in range(n) if bits[a * n + b]
        ),
    )


def is_isomorphic(P1: Poset, P2: Poset) -> bool:
    return P1.n == P2.n and canonical_form(P1) == canonical_form(P2)


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[Poset, ...]:
    if n == 0:
        return (Poset(0),)

    # every poset on n points is a poset on n-1 points plus a maximal element
    # whose down-set is an ideal
    codes = set()
    for smaller in _classes(n - 1):
        for down in ideals(smaller):
            grown = Poset(n, smaller.less_than | frozenset((i, n) for i in down))
            codes.add(canonical_form(grown))
    return tuple(from_canonical_form(code) for code in sorted(codes))


def all_posets(n: int, limit: int = MAX_CLASSES_N) -> Iterator[Poset]:
    """
    One representative per isomorphism class, in canonical-code order.

    `limit` guards the exhaustive bound; the long-running collision search
    raises it to 7.
    """
    if n < 0 or n > limit:
        raise SizeError(f"all_posets is exhaustive, 0 <= n <= {limit} (got {n})")
    yield from _classes(n)
