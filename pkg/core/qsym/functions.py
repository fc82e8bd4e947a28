"""
functions.py
Quasisymmetric functions over Z[q] in the monomial basis

Products, coproduct, antipode, basis change and specializations.
"""

from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from sympy import factorial, ff

from .compositions import (
    Composition,
    coarsenings,
    refinements,
    reverse,
    sort_key,
)
from .qpoly import QRING, QPoly, Scalar, format_qpoly, is_monomial, scale_q

QSymTensor = Dict[Tuple[Composition, Composition], QPoly]


def accumulate(target: Dict, key, coeff: QPoly) -> None:
    total = target.get(key, QRING.zero) + coeff
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class QSymFunction:
    """
    Finite sum Σ c_α M_α with c_α in Z[q]

    Zero coefficients are never stored; equality is exact term-wise.
    Treat instances as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Iterable[int], Scalar]] = None):
        clean: Dict[Composition, QPoly] = {}
        for alpha, coeff in (terms or {}).items():
            accumulate(clean, Composition(alpha), QRING(coeff))
        self._terms = clean
        self._hash = None

    # ==================== CONSTRUCTORS ====================

    @classmethod
    def monomial(cls, alpha: Iterable[int], coeff: Scalar = 1) -> "QSymFunction":
        return cls({Composition(alpha): coeff})

    @classmethod
    def zero(cls) -> "QSymFunction":
        return cls()

    @classmethod
    def one(cls) -> "QSymFunction":
        return cls({Composition(): 1})

    # ==================== ACCESS ====================

    def coefficient(self, alpha: Iterable[int]) -> QPoly:
        return self._terms.get(Composition(alpha), QRING.zero)

    def terms(self) -> List[Tuple[Composition, QPoly]]:
        """Terms in the deterministic display order"""
        return sorted(self._terms.items(), key=lambda item: sort_key(item[0]))

    def items(self):
        return self._terms.items()

    def weights(self) -> frozenset:
        """The grading: weights carrying a nonzero term"""
        return frozenset(sum(alpha) for alpha in self._terms)

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Composition]:
        return iter(self._terms)

    # ==================== ARITHMETIC ====================

    def __add__(self, other: "QSymFunction") -> "QSymFunction":
        result = dict(self._terms)
        for alpha, coeff in other._terms.items():
            accumulate(result, alpha, coeff)
        return QSymFunction._wrap(result)

    def __sub__(self, other: "QSymFunction") -> "QSymFunction":
        return self + (-other)

    def __neg__(self) -> "QSymFunction":
        return QSymFunction._wrap({alpha: -c for alpha, c in self._terms.items()})

    def scale(self, factor: Scalar) -> "QSymFunction":
        factor = QRING(factor)
        return QSymFunction({alpha: c * factor for alpha, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, QSymFunction):
            return quasi_shuffle(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymFunction):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((alpha, hash(c)) for alpha, c in self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return format_function(self)

    @classmethod
    def _wrap(cls, clean: Dict[Composition, QPoly]) -> "QSymFunction":
        obj = cls.__new__(cls)
        obj._terms = clean
        obj._hash = None
        return obj


def format_function(F: QSymFunction, letter: str = "M") -> str:
    """'q^3*M[4] + 2q^2*M[1,3] + (1 - q)*M[2] + M[1,1]'"""
    return format_terms(F.terms(), letter)


def format_terms(terms: Iterable[Tuple[Composition, QPoly]], letter: str = "M") -> str:
    rendered = []
    for alpha, coeff in terms:
        basis = f"{letter}[{','.join(map(str, alpha))}]"
        text = format_qpoly(coeff)
        if text == "1":
            rendered.append(basis)
        elif text == "-1":
            rendered.append(f"-{basis}")
        elif is_monomial(coeff):
            rendered.append(f"{text}*{basis}")
        else:
            rendered.append(f"({text})*{basis}")
    out = " + ".join(rendered)
    return out.replace("+ -", "- ") if out else "0"


# ==================== PRODUCTS ====================

@lru_cache(maxsize=65536)
def _quasi_shuffles(alpha: Tuple[int, ...], beta: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    counts: Dict[Tuple[int, ...], int] = {}
    a, b = alpha[0], beta[0]
    for head, rest in (
        (a, _quasi_shuffles(alpha[1:], beta)),
        (b, _quasi_shuffles(alpha, beta[1:])),
        (a + b, _quasi_shuffles(alpha[1:], beta[1:])),
    ):
        for gamma, mult in rest:
            key = (head,) + gamma
            counts[key] = counts.get(key, 0) + mult
    return tuple(counts.items())


def quasi_shuffle(F: QSymFunction, G: QSymFunction) -> QSymFunction:
    """The product of QSym: M_α · M_β = Σ over quasi-shuffles M_γ"""
    result: Dict[Composition, QPoly] = {}
    for alpha, a in F.items():
        for beta, b in G.items():
            ab = a * b
            for gamma, mult in _quasi_shuffles(tuple(alpha), tuple(beta)):
                accumulate(result, Composition(gamma), ab * mult)
    return QSymFunction._wrap(result)


def power(F: QSymFunction, k: int) -> QSymFunction:
    """k-fold quasi-shuffle power; F^0 = M_∅"""
    result = QSymFunction.one()
    for _ in range(k):
        result = quasi_shuffle(result, F)
    return result


def concat_product(F: QSymFunction, G: QSymFunction) -> QSymFunction:
    """M_α ∘ M_β = M_{α·β}"""
    result: Dict[Composition, QPoly] = {}
    for alpha, a in F.items():
        for beta, b in G.items():
            accumulate(result, alpha + beta, a * b)
    return QSymFunction._wrap(result)


def append(F: QSymFunction, i: int) -> QSymFunction:
    """(F)_i: M_α -> M_{(α, i)}"""
    if i < 1:
        raise ValueError(f"appended part must be positive, got {i}")
    return concat_product(F, QSymFunction.monomial((i,)))


# ==================== COALGEBRA ====================

def coproduct(F: QSymFunction) -> QSymTensor:
    """Deconcatenation: Δ(M_α) = Σ_i M_{α_1..α_i} ⊗ M_{α_{i+1}..α_k}"""
    result: QSymTensor = {}
    for alpha, c in F.items():
        for i in range(len(alpha) + 1):
            accumulate(result, (Composition(alpha[:i]), Composition(alpha[i:])), c)
    return result


def tensor(F: QSymFunction, G: QSymFunction) -> QSymTensor:
    """F ⊗ G expanded on basis pairs"""
    result: QSymTensor = {}
    for alpha, a in F.items():
        for beta, b in G.items():
            accumulate(result, (alpha, beta), a * b)
    return result


def tensor_sum(parts: Iterable[QSymTensor]) -> QSymTensor:
    result: QSymTensor = {}
    for part in parts:
        for key, c in part.items():
            accumulate(result, key, c)
    return result


def counit(F: QSymFunction) -> QPoly:
    return F.coefficient(())


def antipode(F: QSymFunction) -> QSymFunction:
    """S(M_α) = (-1)^{k(α)} Σ_{β coarsening rev(α)} M_β"""
    result: Dict[Composition, QPoly] = {}
    for alpha, c in F.items():
        signed = c if len(alpha) % 2 == 0 else -c
        for beta in coarsenings(reverse(alpha)):
            accumulate(result, beta, signed)
    return QSymFunction._wrap(result)


def antipode_axiom_holds(alpha: Iterable[int]) -> bool:
    """m(S ⊗ id)Δ(M_α) = ε(M_α)·M_∅"""
    alpha = Composition(alpha)
    total = QSymFunction.zero()
    for i in range(len(alpha) + 1):
        left = antipode(QSymFunction.monomial(alpha[:i]))
        total = total + quasi_shuffle(left, QSymFunction.monomial(alpha[i:]))
    expected = QSymFunction.one() if not alpha else QSymFunction.zero()
    return total == expected


def qsym_character(F: QSymFunction) -> QPoly:
    """ζ_Q: M_(n) -> 1 (n >= 0), every other M_α -> 0"""
    total = QRING.zero
    for alpha, c in F.items():
        if len(alpha) <= 1:
            total += c
    return total


# ==================== BASES ====================

def fundamental_to_monomial(alpha: Iterable[int]) -> QSymFunction:
    """L_α = Σ_{α ⪯ β} M_β"""
    return QSymFunction({beta: 1 for beta in refinements(Composition(alpha))})


def monomial_to_fundamental(F: QSymFunction) -> Dict[Composition, QPoly]:
    """Möbius inversion: M_α = Σ_{α ⪯ β} (-1)^{k(β)-k(α)} L_β"""
    result: Dict[Composition, QPoly] = {}
    for alpha, c in F.items():
        for beta in refinements(alpha):
            sign = -1 if (len(beta) - len(alpha)) % 2 else 1
            accumulate(result, beta, c * sign)
    return result


# ==================== SPECIALIZATIONS ====================

def binomial(m: int, k: int) -> int:
    """Falling-factorial binomial, valid for negative m"""
    return int(ff(m, k)) // int(factorial(k))


def principal_specialization(F: QSymFunction, m: int) -> QPoly:
    """ps¹(F)(m): M_α -> binom(m, k(α))"""
    total = QRING.zero
    for alpha, c in F.items():
        total += c * binomial(m, len(alpha))
    return total


def substitute_q(F: QSymFunction, value: int) -> QSymFunction:
    """Coefficient-wise q -> value·q"""
    return QSymFunction({alpha: scale_q(c, value) for alpha, c in F.items()})


def reverse_map(F: QSymFunction) -> QSymFunction:
    """M_α -> M_{rev(α)}"""
    return QSymFunction._wrap({reverse(alpha): c for alpha, c in F.items()})
