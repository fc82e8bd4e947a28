"""
compositions.py
Compositions, descent sets, refinement order
"""

from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, Tuple


class Composition(tuple):
    """Ordered tuple of positive parts; () is the unit index"""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __add__(self, other) -> "Composition":
        return Composition(tuple(self) + tuple(other))

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def sort_key(alpha: Composition) -> Tuple[int, int, Tuple[int, ...]]:
    """Display and hashing order: weight, then length, then parts"""
    return (sum(alpha), len(alpha), tuple(alpha))


def descent_set(alpha: Composition) -> FrozenSet[int]:
    """D(α) = {α_1, α_1+α_2, ..., α_1+...+α_{k-1}}"""
    partial, result = 0, set()
    for part in alpha[:-1]:
        partial += part
        result.add(partial)
    return frozenset(result)


def composition_from_descents(n: int, descents: Iterable[int]) -> Composition:
    if n == 0:
        return Composition()
    cuts = sorted(set(descents))
    if any(d < 1 or d >= n for d in cuts):
        raise ValueError(f"descents must lie in 1..{n - 1}: {cuts}")
    bounds = [0] + cuts + [n]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


def refines(beta: Composition, alpha: Composition) -> bool:
    """β ⪯ α, i.e. α refines β: D(β) ⊆ D(α)"""
    return sum(beta) == sum(alpha) and descent_set(beta) <= descent_set(alpha)


def reverse(alpha: Composition) -> Composition:
    return Composition(reversed(alpha))


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, by length then lexicographically"""
    for k in range(0 if n == 0 else 1, n + 1):
        yield from compositions_of_length(n, k)


def compositions_of_length(n: int, k: int) -> Iterator[Composition]:
    if n == 0:
        if k == 0:
            yield Composition()
        return
    if k < 1:
        return
    for cuts in combinations(range(1, n), k - 1):
        yield composition_from_descents(n, cuts)


def coarsenings(alpha: Composition) -> Iterator[Composition]:
    """Every β with D(β) ⊆ D(α)"""
    n, descents = sum(alpha), sorted(descent_set(alpha))
    for size in range(len(descents) + 1):
        for subset in combinations(descents, size):
            yield composition_from_descents(n, subset)


def refinements(alpha: Composition) -> Iterator[Composition]:
    """Every β with D(α) ⊆ D(β)"""
    n, descents = sum(alpha), descent_set(alpha)
    free = [d for d in range(1, n) if d not in descents]
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            yield composition_from_descents(n, descents | set(extra))
