"""
qpoly.py
The weight ring Z[q] (exact, arbitrary-precision coefficients)
"""

from typing import Iterable, List, Union

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

QRING, q = ring("q", ZZ)

QPoly = PolyElement
Scalar = Union[int, PolyElement]


def as_qpoly(value: Scalar) -> QPoly:
    return QRING(value)


def from_coefficients(coeffs: Iterable[int]) -> QPoly:
    """Ascending coefficient list -> polynomial"""
    return QRING.from_dict({(k,): int(c) for k, c in enumerate(coeffs) if c})


def q_power(k: int) -> QPoly:
    return QRING.from_dict({(k,): 1})


def coefficients(p: QPoly) -> List[int]:
    """Ascending coefficients; [] for the zero polynomial"""
    if not p:
        return []
    top = p.degree()
    return [int(p.get((k,), 0)) for k in range(top + 1)]


def degree(p: QPoly) -> int:
    """-1 for the zero polynomial"""
    return p.degree() if p else -1


def scale_q(p: QPoly, value: int) -> QPoly:
    """q -> value*q"""
    return QRING.from_dict({(k,): c * value ** k for (k,), c in p.items()})


def format_qpoly(p: QPoly) -> str:
    """Ascending powers: '1 + 4q + 4q^2 + q^3', '1 - q', '0'"""
    coeffs = coefficients(p)
    parts: List[str] = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = "q" if k == 1 else f"q^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def is_monomial(p: QPoly) -> bool:
    return len(p) == 1
