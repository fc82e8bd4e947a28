"""
closed_forms.py
Closed expressions of F_q(C(P)) for stars, chains and complete bipartite posets
"""

from ..qsym import (
    QRING,
    QPoly,
    QSymFunction,
    append,
    binomial,
    compositions_of_length,
    concat_product,
    power,
    q_power,
)

M1 = QSymFunction.monomial((1,))


def closed_form_star(n: int) -> QSymFunction:
    """Σ_i binom(n-1, i) (M_(1)^{n-1-i})_{i+1} q^i"""
    if n < 1:
        raise ValueError(f"star needs n >= 1, got {n}")
    result = QSymFunction.zero()
    for i in range(n):
        term = append(power(M1, n - 1 - i), i + 1)
        result = result + term.scale(q_power(i) * binomial(n - 1, i))
    return result


def closed_form_chain(n: int) -> QSymFunction:
    """Σ_i (Σ_{k(α) = n-i} M_α) q^i"""
    if n < 1:
        raise ValueError(f"chain needs n >= 1, got {n}")
    terms = {}
    for i in range(n):
        for alpha in compositions_of_length(n, n - i):
            terms[alpha] = q_power(i)
    return QSymFunction(terms)


def closed_form_bipartite(m: int, n: int) -> QSymFunction:
    """
    M_(1)^m ∘ M_(1)^n
      + Σ_{k>=1} q^k Σ_{t1+t2=k+1} binom(m,t1) binom(n,t2) M_(1)^{m-t1} ∘ M_(t1+t2) ∘ M_(1)^{n-t2}

    The q^k terms come from flags with one block meeting both sides.
    """
    if m < 1 or n < 1:
        raise ValueError(f"bipartite needs m, n >= 1, got {m}, {n}")
    result = concat_product(power(M1, m), power(M1, n))
    for t1 in range(1, m + 1):
        for t2 in range(1, n + 1):
            k = t1 + t2 - 1
            middle = QSymFunction.monomial((t1 + t2,))
            term = concat_product(concat_product(power(M1, m - t1), middle), power(M1, n - t2))
            result = result + term.scale(q_power(k) * (binomial(m, t1) * binomial(n, t2)))
    return result


def bipartite_f_polynomial(m: int, n: int) -> QPoly:
    """1 + Σ_k q^k Σ_{t1+t2=k+1} binom(m,t1) binom(n,t2)"""
    total = QRING.one
    for t1 in range(1, m + 1):
        for t2 in range(1, n + 1):
            total += q_power(t1 + t2 - 1) * (binomial(m, t1) * binomial(n, t2))
    return total


def tree_f_polynomial(n: int) -> QPoly:
    """(1 + q)^{n-1}"""
    return (QRING.one + q_power(1)) ** max(n - 1, 0)
