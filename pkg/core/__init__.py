"""
Core Module - Poset, QSym, Enumerator, Geometry, Verification, Observability
"""

from .errors import (
    EnumeratorError,
    CycleError,
    FlagError,
    SizeError,
    WeightError,
    ConnectivityError,
)
from .poset import Poset, IdealFlag, poset_from_relations, ideal_flags, all_posets
from .qsym import Composition, QSymFunction, TruncatedExpansion
from .enumerator import fq_poset_cone, f_polynomial, f0
from .observability.metrics import CheckMetrics, get_metrics
from .observability.logger import StructuredLogger, get_logger

__all__ = [
    # Errors
    "EnumeratorError",
    "CycleError",
    "FlagError",
    "SizeError",
    "WeightError",
    "ConnectivityError",

    # Poset
    "Poset",
    "IdealFlag",
    "poset_from_relations",
    "ideal_flags",
    "all_posets",

    # QSym
    "Composition",
    "QSymFunction",
    "TruncatedExpansion",

    # Enumerator
    "fq_poset_cone",
    "f_polynomial",
    "f0",

    # Observability
    "CheckMetrics",
    "StructuredLogger",
    "get_metrics",
    "get_logger",
]
