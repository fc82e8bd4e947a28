"""
positivity.py
Circuits of the comparability graph and the positive-subposet test
"""

from typing import Iterator, Tuple

from .poset import Poset, SubposetRelation


def circuits(P: Poset) -> Iterator[Tuple[int, ...]]:
    """
    Simple cycles (length >= 3, distinct vertices) of the comparability graph.

    Each cycle is reported once: it starts at its smallest vertex and the
    second vertex is smaller than the last.
    """
    neighbours = {v: sorted(w for w in P.elements if P.comparable(v, w)) for v in P.elements}

    for start in P.elements:
        path = [start]
        on_path = {start}

        def walk(v: int):
            for w in neighbours[v]:
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif w > start and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from walk(w)
                    path.pop()
                    on_path.discard(w)

        yield from walk(start)


def is_positive_subposet(P: Poset, Q: SubposetRelation) -> bool:
    """
    Q is positive when, along every circuit, all down-edges lie in Q
    exactly when all up-edges do.
    """
    for cycle in circuits(P):
        up_in, down_in = True, True
        for t, a in enumerate(cycle):
            b = cycle[(t + 1) % len(cycle)]
            if P.is_less(a, b):
                up_in = up_in and (a, b) in Q.relations
            else:
                down_in = down_in and (b, a) in Q.relations
        if up_in != down_in:
            return False
    return True
