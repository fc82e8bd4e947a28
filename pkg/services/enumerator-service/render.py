"""
render.py
Text and JSON rendering of enumerator results

Text terms: "c(q)*M[a,b,c]", coefficients in ascending powers, terms by
(length, lex) on compositions. JSON coefficients are ascending integer arrays.
"""

import json
from typing import Any, Dict, List, Tuple

from core.qsym import (
    Composition,
    QPoly,
    QSymFunction,
    TruncatedExpansion,
    coefficients,
    format_qpoly,
    format_terms,
    monomial_to_fundamental,
    sort_key,
)

BASES = ("M", "L")


def basis_terms(F: QSymFunction, basis: str = "M") -> List[Tuple[Composition, QPoly]]:
    if basis == "M":
        return F.terms()
    if basis == "L":
        return sorted(monomial_to_fundamental(F).items(), key=lambda item: sort_key(item[0]))
    raise ValueError(f"unknown basis {basis!r}; choose M or L")


def function_text(F: QSymFunction, basis: str = "M") -> str:
    return format_terms(basis_terms(F, basis), letter=basis)


def function_json(F: QSymFunction, basis: str = "M", **extra: Any) -> Dict[str, Any]:
    return {
        **extra,
        "basis": basis,
        "terms": [
            {"composition": list(alpha), "coefficients": coefficients(coeff)}
            for alpha, coeff in basis_terms(F, basis)
        ],
    }


def qpoly_text(p: QPoly) -> str:
    return format_qpoly(p)


def qpoly_json(p: QPoly, **extra: Any) -> Dict[str, Any]:
    return {**extra, "coefficients": coefficients(p)}


def expansion_text(E: TruncatedExpansion) -> str:
    return repr(E)


def expansion_json(E: TruncatedExpansion, **extra: Any) -> Dict[str, Any]:
    return {
        **extra,
        "m": E.m,
        "monomials": [
            {"exponents": list(exps), "coefficients": coefficients(coeff)}
            for exps, coeff in E.sorted_terms()
        ],
    }


def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, ensure_ascii=False)
