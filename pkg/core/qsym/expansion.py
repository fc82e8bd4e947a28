"""
expansion.py
Finite-variable expansion of quasisymmetric functions

truncate(F, m) sets x_{m+1} = x_{m+2} = ... = 0 and keeps every monomial
in x_1..x_m exactly, coefficients in Z[q].
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from .functions import QSymFunction
from .qpoly import QRING, QPoly, Scalar, format_qpoly, is_monomial

Exponents = Tuple[int, ...]


@dataclass
class TruncatedExpansion:
    """Polynomial in x_1..x_m: exponent vector -> nonzero QPoly"""

    m: int
    monomials: Dict[Exponents, QPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"number of variables must be >= 0, got {self.m}")
        clean: Dict[Exponents, QPoly] = {}
        for exps, coeff in self.monomials.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.m or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for m={self.m}")
            self._add(clean, exps, QRING(coeff))
        self.monomials = clean

    @staticmethod
    def _add(target: Dict[Exponents, QPoly], exps: Exponents, coeff: QPoly) -> None:
        total = target.get(exps, QRING.zero) + coeff
        if total:
            target[exps] = total
        else:
            target.pop(exps, None)

    def add_term(self, exps: Iterable[int], coeff: Scalar = 1) -> None:
        """In-place accumulation, used by the enumerating oracles"""
        self._add(self.monomials, tuple(exps), QRING(coeff))

    def coefficient(self, exps: Iterable[int]) -> QPoly:
        return self.monomials.get(tuple(exps), QRING.zero)

    def degrees(self) -> frozenset:
        return frozenset(sum(e) for e in self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def _check_same_m(self, other: "TruncatedExpansion") -> None:
        if self.m != other.m:
            raise ValueError(f"expansions in {self.m} and {other.m} variables")

    def __add__(self, other: "TruncatedExpansion") -> "TruncatedExpansion":
        self._check_same_m(other)
        result = TruncatedExpansion(self.m, dict(self.monomials))
        for exps, coeff in other.monomials.items():
            result.add_term(exps, coeff)
        return result

    def __mul__(self, other: "TruncatedExpansion") -> "TruncatedExpansion":
        self._check_same_m(other)
        result = TruncatedExpansion(self.m)
        for a, ca in self.monomials.items():
            for b, cb in other.monomials.items():
                result.add_term(tuple(x + y for x, y in zip(a, b)), ca * cb)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedExpansion):
            return NotImplemented
        return self.m == other.m and self.monomials == other.monomials

    def sorted_terms(self) -> List[Tuple[Exponents, QPoly]]:
        # graded, then reverse lexicographic so x1^2 precedes x1*x2
        return sorted(self.monomials.items(), key=lambda t: (sum(t[0]), [-e for e in t[0]]))

    def __repr__(self) -> str:
        if not self.monomials:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = format_monomial(exps)
            text = format_qpoly(coeff)
            if text == "1":
                parts.append(mono)
            elif is_monomial(coeff):
                parts.append(f"{text}*{mono}")
            else:
                parts.append(f"({text})*{mono}")
        return " + ".join(parts)


def format_monomial(exps: Exponents) -> str:
    """(2,1,0) -> 'x1^2*x2'; the empty monomial renders as '1'"""
    factors = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) or "1"


def truncate(F: QSymFunction, m: int) -> TruncatedExpansion:
    """M_α -> Σ_{i_1 < ... < i_k <= m} x_{i_1}^{α_1} ... x_{i_k}^{α_k}"""
    result = TruncatedExpansion(m)
    for alpha, coeff in F.items():
        for positions in combinations(range(m), len(alpha)):
            exps = [0] * m
            for pos, part in zip(positions, alpha):
                exps[pos] = part
            result.add_term(exps, coeff)
    return result
