"""
oracle.py
Integer-point oracle: F_q(C(P)) from P-monotone weight vectors

A vector ω lies in the normal fan of C(P) iff ω_i <= ω_j whenever
i <_P j; its level flag is then a flag of ideals of P, and it contributes
q^{rk_P(level flag)} x_{ω_1} ... x_{ω_n}.
"""

from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Iterable, Iterator, Tuple

from ..errors import EnumeratorError
from ..observability import get_logger
from ..poset import IdealFlag, Poset, block_rank
from ..qsym import Composition, TruncatedExpansion, q_power


@dataclass(frozen=True)
class WeightVector:
    """ω = (ω_1, ..., ω_n) with positive integer entries"""

    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(w) for w in self.entries))
        if any(w < 1 for w in self.entries):
            raise EnumeratorError(f"weights must be positive: {self.entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        """1-based: ω[i] = ω_i"""
        return self.entries[i - 1]

    def exponents(self, m: int) -> Tuple[int, ...]:
        """Exponent vector of x_{ω_1} ... x_{ω_n} in x_1..x_m"""
        exps = [0] * m
        for w in self.entries:
            exps[w - 1] += 1
        return tuple(exps)


@dataclass(frozen=True)
class LevelFlag:
    """Level sets of ω ordered by increasing value"""

    blocks: Tuple[FrozenSet[int], ...]
    values: Tuple[int, ...]

    @property
    def type(self) -> Composition:
        return Composition(len(b) for b in self.blocks)

    def as_ideal_flag(self) -> IdealFlag:
        return IdealFlag(self.blocks)


def in_normal_fan(P: Poset, omega: WeightVector) -> bool:
    if omega.n != P.n:
        raise EnumeratorError(f"weight vector has length {omega.n}, poset has n={P.n}")
    return all(omega[i] <= omega[j] for i, j in P.less_than)


def level_flag(omega: WeightVector) -> LevelFlag:
    values = sorted(set(omega.entries))
    blocks = tuple(
        frozenset(i for i in range(1, omega.n + 1) if omega[i] == v) for v in values
    )
    return LevelFlag(blocks, tuple(values))


def monotone_vectors(P: Poset, m: int) -> Iterator[WeightVector]:
    """Every ω in {1..m}^n inside the normal fan, lexicographically"""
    for entries in product(range(1, m + 1), repeat=P.n):
        if all(entries[i - 1] <= entries[j - 1] for i, j in P.less_than):
            yield WeightVector(entries)


def fq_integer_points(P: Poset, m: int) -> TruncatedExpansion:
    """Σ_{ω monotone, ω <= m} q^{rk_P(F_ω)} x_{ω_1} ... x_{ω_n}"""
    if m < 1:
        raise EnumeratorError(f"truncation needs m >= 1, got {m}")
    result = TruncatedExpansion(m)
    vectors = 0
    for omega in monotone_vectors(P, m):
        flag = level_flag(omega).as_ideal_flag()
        result.add_term(omega.exponents(m), q_power(block_rank(P, flag)))
        vectors += 1
    get_logger().oracle(f"integer points of {P!r} up to m={m}", n=P.n, m=m, vectors=vectors)
    return result


def realizing_vector(flag: IdealFlag) -> WeightVector:
    """ω with level flag equal to `flag`: block t gets value t"""
    return WeightVector(tuple(flag.level(i) for i in range(1, flag.n + 1)))


def realizes_all_flags(P: Poset, flags: Iterable[IdealFlag]) -> bool:
    """Every flag of ideals is the level flag of a monotone ω"""
    for flag in flags:
        omega = realizing_vector(flag)
        if not in_normal_fan(P, omega) or level_flag(omega).as_ideal_flag() != flag:
            return False
    return True
