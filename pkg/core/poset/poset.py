"""
poset.py
Finite posets on {1..n}: storage, closure, ideals, components, extensions
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple, Union

from ..errors import CycleError, EnumeratorError

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Poset:
    """
    Strict partial order on the ground set {1..n}

    `less_than` holds every pair (i, j) with i <_P j and is always
    transitively closed. Build instances through `poset_from_relations`
    unless the pairs are already known to be closed.
    """

    n: int
    less_than: FrozenSet[Pair] = frozenset()

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def _below(self) -> Dict[int, FrozenSet[int]]:
        below: Dict[int, set] = {j: set() for j in self.elements}
        for i, j in self.less_than:
            below[j].add(i)
        return {j: frozenset(s) for j, s in below.items()}

    @cached_property
    def _above(self) -> Dict[int, FrozenSet[int]]:
        above: Dict[int, set] = {i: set() for i in self.elements}
        for i, j in self.less_than:
            above[i].add(j)
        return {i: frozenset(s) for i, s in above.items()}

    def below(self, j: int) -> FrozenSet[int]:
        """Elements strictly below j"""
        return self._below[j]

    def above(self, i: int) -> FrozenSet[int]:
        """Elements strictly above i"""
        return self._above[i]

    def is_less(self, i: int, j: int) -> bool:
        return (i, j) in self.less_than

    def comparable(self, i: int, j: int) -> bool:
        return (i, j) in self.less_than or (j, i) in self.less_than

    def sorted_relations(self) -> List[Pair]:
        return sorted(self.less_than)

    def __repr__(self) -> str:
        rels = " ".join(f"{i}<{j}" for i, j in self.sorted_relations())
        return f"Poset({self.n}: {rels})" if rels else f"Poset({self.n})"


@dataclass(frozen=True)
class SubposetRelation:
    """
    A transitively closed subset of a host poset's relations, read on the
    host's ground set. Quotients P/F and positive subposets live here.
    """

    host_n: int
    relations: FrozenSet[Pair] = frozenset()

    @property
    def n(self) -> int:
        return self.host_n

    @property
    def less_than(self) -> FrozenSet[Pair]:
        return self.relations

    @classmethod
    def of(cls, host: Poset, pairs: Iterable[Pair]) -> "SubposetRelation":
        rels = frozenset((int(i), int(j)) for i, j in pairs)
        if not rels <= host.less_than:
            raise EnumeratorError(f"relations {sorted(rels - host.less_than)} are not in the host poset")
        if not is_transitively_closed(rels):
            raise EnumeratorError("subposet relations must be transitively closed")
        return cls(host.n, rels)

    def as_poset(self) -> Poset:
        """Re-read the relation set as a poset on {1..host_n}"""
        return Poset(self.host_n, self.relations)

    def sorted_relations(self) -> List[Pair]:
        return sorted(self.relations)

    @property
    def is_discrete(self) -> bool:
        return not self.relations


Relational = Union[Poset, SubposetRelation]


# ==================== CONSTRUCTION ====================

def is_transitively_closed(pairs: FrozenSet[Pair]) -> bool:
    for i, j in pairs:
        for k, l in pairs:
            if j == k and (i, l) not in pairs:
                return False
    return True


def poset_from_relations(n: int, pairs: Iterable[Pair]) -> Poset:
    """
    Transitive closure of the given strict relations.

    Raises IndexError for labels outside {1..n} and CycleError when the
    closure is not a strict order.
    """
    if n < 0:
        raise IndexError(f"ground-set size must be non-negative, got {n}")

    below: Dict[int, set] = {j: set() for j in range(1, n + 1)}
    for i, j in pairs:
        i, j = int(i), int(j)
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"relation ({i},{j}) outside ground set 1..{n}")
        if i == j:
            raise CycleError(f"reflexive relation ({i},{i})")
        below[j].add(i)

    # Warshall over down-sets
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            if k in below[j]:
                below[j] |= below[k]

    for j in range(1, n + 1):
        if j in below[j]:
            raise CycleError(f"relations close into a cycle through {j}")

    return Poset(n, frozenset((i, j) for j, s in below.items() for i in s))


# ==================== STRUCTURE ====================

def is_ideal(P: Poset, S: Iterable[int]) -> bool:
    """True iff no element outside S lies below an element of S"""
    S = frozenset(S)
    return all(P.below(j) <= S for j in S)


def covers(P: Poset) -> FrozenSet[Pair]:
    """Cover relations i ⋖ j (Hasse diagram edges)"""
    return frozenset(
        (i, j) for i, j in P.less_than
        if not (P.above(i) & P.below(j))
    )


def maximal_elements(P: Poset) -> FrozenSet[int]:
    return frozenset(i for i in P.elements if not P.above(i))


def minimal_elements(P: Poset) -> FrozenSet[int]:
    return frozenset(j for j in P.elements if not P.below(j))


def connected_components(P: Relational) -> List[FrozenSet[int]]:
    """Components of the comparability graph, ordered by smallest element"""
    adjacency: Dict[int, set] = {v: set() for v in range(1, P.n + 1)}
    for i, j in P.less_than:
        adjacency[i].add(j)
        adjacency[j].add(i)

    seen: set = set()
    components: List[FrozenSet[int]] = []
    for start in range(1, P.n + 1):
        if start in seen:
            continue
        stack, component = [start], set()
        while stack:
            v = stack.pop()
            if v in component:
                continue
            component.add(v)
            stack.extend(adjacency[v] - component)
        seen |= component
        components.append(frozenset(component))
    return components


def is_connected(P: Relational) -> bool:
    return len(connected_components(P)) <= 1


def rank(P: Relational) -> int:
    """rk(P) = n - c(P), the dimension of the poset cone"""
    return P.n - len(connected_components(P))


def is_tree_hasse(P: Poset) -> bool:
    """The Hasse diagram is a tree: connected with n - 1 cover edges"""
    return P.n >= 1 and is_connected(P) and len(covers(P)) == P.n - 1


def restriction(P: Poset, S: Iterable[int]) -> Poset:
    """P|_S relabelled onto {1..|S|} by the increasing label map"""
    ordered = sorted(set(S))
    index = {v: t for t, v in enumerate(ordered, start=1)}
    return Poset(
        len(ordered),
        frozenset((index[i], index[j]) for i, j in P.less_than if i in index and j in index),
    )


def ideals(P: Poset) -> Iterator[FrozenSet[int]]:
    """Every ideal, ∅ included, by size then lexicographically"""
    found = [frozenset()] + ideal_blocks(P, frozenset(P.elements))
    yield from sorted(found, key=lambda s: (len(s), sorted(s)))


def ideal_blocks(P: Poset, remaining: FrozenSet[int]) -> List[FrozenSet[int]]:
    """
    Nonempty ideals of P restricted to `remaining`, in lexicographic order
    of their sorted element tuples.

    Generated from antichains: each antichain of the restriction is the
    frontier (set of maximal elements) of exactly one ideal.
    """
    order = sorted(remaining)
    result: List[FrozenSet[int]] = []

    def extend(start: int, frontier: Tuple[int, ...], closure: FrozenSet[int]):
        for t in range(start, len(order)):
            v = order[t]
            if any(P.comparable(v, a) for a in frontier):
                continue
            down = closure | (P.below(v) & remaining) | {v}
            result.append(down)
            extend(t + 1, frontier + (v,), down)

    extend(0, (), frozenset())
    result.sort(key=sorted)
    return result


def linear_extensions(P: Poset) -> Iterator[Tuple[int, ...]]:
    """All linear extensions in lexicographic order"""
    n = P.n
    remaining_below = {j: len(P.below(j)) for j in P.elements}
    prefix: List[int] = []
    used: set = set()

    def backtrack():
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in P.elements:
            if v in used or remaining_below[v]:
                continue
            used.add(v)
            prefix.append(v)
            for w in P.above(v):
                remaining_below[w] -= 1
            yield from backtrack()
            for w in P.above(v):
                remaining_below[w] += 1
            prefix.pop()
            used.discard(v)

    yield from backtrack()


# ==================== LABELLINGS ====================

def relabel(P: Poset, mapping: Dict[int, int]) -> Poset:
    """Apply a bijection of {1..n} to the labels"""
    return Poset(P.n, frozenset((mapping[i], mapping[j]) for i, j in P.less_than))


def is_well_labelled(P: Poset) -> bool:
    """i <_P j implies i >_Z j"""
    return all(i > j for i, j in P.less_than)


def well_labelling(P: Poset) -> Poset:
    """Isomorphic copy labelled by the reversed first linear extension"""
    extension = next(linear_extensions(P))
    return relabel(P, {v: P.n - t for t, v in enumerate(extension)})
