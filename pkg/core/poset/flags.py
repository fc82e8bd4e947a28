"""
flags.py
Flags of ideals, quotients P/F and their ranks
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from ..errors import FlagError
from ..qsym.compositions import Composition
from .poset import (
    Poset,
    SubposetRelation,
    connected_components,
    ideal_blocks,
    ideals,
    is_ideal,
    restriction,
)


@dataclass(frozen=True)
class IdealFlag:
    """
    Ordered set partition (B_1, ..., B_k) of {1..n}

    Whether the prefix unions are ideals depends on a host poset and is
    checked by `flag_of`; the constructor only checks the partition.
    """

    blocks: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        seen: set = set()
        for block in self.blocks:
            if not block:
                raise FlagError("flag blocks must be nonempty")
            if seen & block:
                raise FlagError(f"flag blocks overlap on {sorted(seen & block)}")
            seen |= block
        if seen != set(range(1, len(seen) + 1)):
            raise FlagError(f"flag blocks do not cover 1..{len(seen)}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    @property
    def type(self) -> Composition:
        return Composition(len(b) for b in self.blocks)

    def prefix_unions(self) -> List[FrozenSet[int]]:
        unions, acc = [], frozenset()
        for block in self.blocks:
            acc = acc | block
            unions.append(acc)
        return unions

    def level(self, i: int) -> int:
        """1-based index of the block holding i"""
        return self._levels[i]

    @cached_property
    def _levels(self) -> Dict[int, int]:
        return {v: t for t, block in enumerate(self.blocks, start=1) for v in block}

    def opposite(self) -> "IdealFlag":
        return IdealFlag(tuple(reversed(self.blocks)))

    def sorted_blocks(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(b)) for b in self.blocks)

    def __repr__(self) -> str:
        return "(" + "|".join(",".join(map(str, b)) for b in self.sorted_blocks()) + ")"


def flag_of(P: Poset, blocks: Iterable[Iterable[int]]) -> IdealFlag:
    """Validated IdealFlag for host P; FlagError otherwise"""
    flag = IdealFlag(tuple(frozenset(b) for b in blocks))
    _check_flag(P, flag)
    return flag


def _check_flag(P: Poset, F: IdealFlag) -> None:
    if F.n != P.n:
        raise FlagError(f"flag covers {F.n} elements, poset has {P.n}")
    for union in F.prefix_unions():
        if not is_ideal(P, union):
            raise FlagError(f"prefix union {sorted(union)} is not an ideal")


# ==================== ENUMERATION ====================

@lru_cache(maxsize=8192)
def _flag_list(P: Poset) -> Tuple[IdealFlag, ...]:
    if P.n == 0:
        return (IdealFlag(()),)

    found: List[IdealFlag] = []

    # depth-first: the next block is a nonempty ideal of the remainder
    def extend(remaining: FrozenSet[int], prefix: Tuple[FrozenSet[int], ...]):
        if not remaining:
            found.append(IdealFlag(prefix))
            return
        for block in ideal_blocks(P, remaining):
            extend(remaining - block, prefix + (block,))

    extend(frozenset(P.elements), ())
    # DFS order is lexicographic on sorted blocks; stable sort keeps it within each k
    found.sort(key=lambda f: f.length)
    return tuple(found)


def ideal_flags(P: Poset) -> Iterator[IdealFlag]:
    """
    Every flag of ideals of P, by number of blocks then lexicographically
    on the sorted-block sequence. n = 0 yields the single empty flag.
    """
    yield from _flag_list(P)


def count_ideal_flags(P: Poset) -> int:
    return len(_flag_list(P))


# ==================== QUOTIENTS ====================

def quotient(P: Poset, F: IdealFlag) -> SubposetRelation:
    """P/F: the relations of P inside single blocks of F"""
    _check_flag(P, F)
    return block_quotient(P, F)


def block_quotient(P: Poset, F: IdealFlag) -> SubposetRelation:
    """`quotient` for flags already known to come from `ideal_flags(P)`"""
    levels = F._levels
    return SubposetRelation(
        P.n,
        frozenset((i, j) for i, j in P.less_than if levels[i] == levels[j]),
    )


def rank_of_flag(P: Poset, F: IdealFlag) -> int:
    """rk_P(F) = n - c(P/F)"""
    return P.n - len(connected_components(quotient(P, F)))


def block_rank(P: Poset, F: IdealFlag) -> int:
    return P.n - len(connected_components(block_quotient(P, F)))


def poset_coproduct(P: Poset) -> List[Tuple[Poset, Poset]]:
    """Δ[P] = Σ_{S ideal} [P|_S] ⊗ [P|_{[n]∖S}], restrictions relabelled"""
    everything = frozenset(P.elements)
    return [(restriction(P, S), restriction(P, everything - S)) for S in ideals(P)]
