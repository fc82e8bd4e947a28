"""
survey.py
Does F(P) tell non-isomorphic posets apart?
"""

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..enumerator import f0, fq_poset_cone
from ..errors import SizeError
from ..observability.logger import StructuredLogger, get_logger
from ..poset import Poset, all_posets
from ..poset.canonical import MAX_CLASSES_N
from ..qsym import Composition, QPoly, QSymFunction, sort_key

MAX_SURVEY_N = 6
MAX_SEARCH_N = 7


@dataclass
class SurveyLevel:
    n: int
    classes: int
    collisions: List[Tuple[Poset, Poset]] = field(default_factory=list)

    def line(self) -> str:
        return f"n={self.n}: {self.classes} classes, {len(self.collisions)} collisions"


@dataclass
class Separation:
    """Two classes with equal F(P) and the first ζ_α telling their F_q apart"""
    first: Poset
    second: Poset
    alpha: Composition
    first_coeff: QPoly
    second_coeff: QPoly


def _groups_by_f0(posets: List[Poset]) -> List[List[Poset]]:
    groups: Dict[QSymFunction, List[Poset]] = defaultdict(list)
    for P in posets:
        groups[f0(P)].append(P)
    return [g for g in groups.values() if len(g) > 1]


def survey(max_n: int, logger: Optional[StructuredLogger] = None) -> List[SurveyLevel]:
    """Pairs of classes with the same F(P), for each n <= max_n"""
    if max_n < 0 or max_n > MAX_SURVEY_N:
        raise SizeError(f"survey runs for n <= {MAX_SURVEY_N} (got {max_n})")
    logger = logger or get_logger()

    levels = []
    for n in range(1, max_n + 1):
        posets = list(all_posets(n))
        level = SurveyLevel(n, len(posets))
        for group in _groups_by_f0(posets):
            level.collisions.extend(
                (group[a], group[b]) for a in range(len(group)) for b in range(a + 1, len(group))
            )
        logger.survey(level.line(), n=n, classes=level.classes, collisions=len(level.collisions))
        levels.append(level)
    return levels


def separating_alpha(P1: Poset, P2: Poset) -> Optional[Composition]:
    """First composition (display order) where ζ_α(P1) != ζ_α(P2)"""
    F1, F2 = fq_poset_cone(P1), fq_poset_cone(P2)
    for alpha in sorted(set(F1) | set(F2), key=sort_key):
        if F1.coefficient(alpha) != F2.coefficient(alpha):
            return alpha
    return None


def search_collision(n: int, logger: Optional[StructuredLogger] = None) -> List[Separation]:
    """Classes on n points with equal F(P) but different F_q(C(P))"""
    if n < 1 or n > MAX_SEARCH_N:
        raise SizeError(f"collision search runs for 1 <= n <= {MAX_SEARCH_N} (got {n})")
    logger = logger or get_logger()

    found = []
    limit = max(MAX_CLASSES_N, n)
    for group in _groups_by_f0(list(all_posets(n, limit=limit))):
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                alpha = separating_alpha(group[a], group[b])
                if alpha is None:
                    continue
                found.append(Separation(
                    group[a], group[b], alpha,
                    fq_poset_cone(group[a]).coefficient(alpha),
                    fq_poset_cone(group[b]).coefficient(alpha),
                ))
    logger.survey(f"collision search at n={n}", n=n, pairs=len(found))
    return found
