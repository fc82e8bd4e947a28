"""
constructors.py
Named poset families, products, and random fixtures
"""

import random
from typing import Optional

from .poset import Poset, poset_from_relations, relabel


def antichain(n: int) -> Poset:
    return Poset(n, frozenset())


def chain(n: int) -> Poset:
    """1 < 2 < ... < n"""
    return poset_from_relations(n, [(i, i + 1) for i in range(1, n)])


def star(n: int) -> Poset:
    """st_n: covers i ⋖ n for every i < n"""
    return Poset(n, frozenset((i, n) for i in range(1, n)))


def complete_bipartite(m: int, n: int) -> Poset:
    """K_{m,n}: i < j for i in [m], j in [m+n] ∖ [m]"""
    return Poset(
        m + n,
        frozenset((i, j) for i in range(1, m + 1) for j in range(m + 1, m + n + 1)),
    )


def _shifted(P: Poset, offset: int) -> frozenset:
    return frozenset((i + offset, j + offset) for i, j in P.less_than)


def disjoint_union(P1: Poset, P2: Poset) -> Poset:
    """P1 ⊔ P2, second operand shifted by |P1|"""
    return Poset(P1.n + P2.n, P1.less_than | _shifted(P2, P1.n))


def series_composition(P1: Poset, P2: Poset) -> Poset:
    """P1 ∗ P2: every element of P1 below every element of P2"""
    between = frozenset(
        (i, j) for i in P1.elements for j in range(P1.n + 1, P1.n + P2.n + 1)
    )
    return Poset(P1.n + P2.n, P1.less_than | _shifted(P2, P1.n) | between)


def opposite(P: Poset) -> Poset:
    return Poset(P.n, frozenset((j, i) for i, j in P.less_than))


# ==================== RANDOM FIXTURES ====================

def random_relabel(P: Poset, rng: random.Random) -> Poset:
    labels = list(P.elements)
    rng.shuffle(labels)
    return relabel(P, dict(zip(P.elements, labels)))


def random_poset(n: int, rng: random.Random, density: Optional[float] = None) -> Poset:
    """Random relations compatible with a random total order, then closed"""
    density = rng.uniform(0.2, 0.7) if density is None else density
    order = list(range(1, n + 1))
    rng.shuffle(order)
    pairs = [
        (order[a], order[b])
        for a in range(n) for b in range(a + 1, n)
        if rng.random() < density
    ]
    return poset_from_relations(n, pairs)


def random_tree_poset(n: int, rng: random.Random) -> Poset:
    """Randomly oriented random tree; its Hasse diagram is the tree itself"""
    pairs = []
    for v in range(2, n + 1):
        u = rng.randint(1, v - 1)
        pairs.append((u, v) if rng.random() < 0.5 else (v, u))
    return random_relabel(poset_from_relations(n, pairs), rng)
