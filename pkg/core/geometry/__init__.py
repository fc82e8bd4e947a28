"""
Geometry Module - normal fan, integer-point oracle, face lattice of C(P)
"""

from .oracle import (
    WeightVector,
    LevelFlag,
    in_normal_fan,
    level_flag,
    monotone_vectors,
    fq_integer_points,
    realizing_vector,
    realizes_all_flags,
)
from .faces import (
    MAX_SUBPOSET_N,
    face_lattice,
    f_vector,
    f_vector_polynomial,
    positive_subposet_cross_check,
    euler_flag_identity,
)

__all__ = [
    "WeightVector",
    "LevelFlag",
    "in_normal_fan",
    "level_flag",
    "monotone_vectors",
    "fq_integer_points",
    "realizing_vector",
    "realizes_all_flags",
    "MAX_SUBPOSET_N",
    "face_lattice",
    "f_vector",
    "f_vector_polynomial",
    "positive_subposet_cross_check",
    "euler_flag_identity",
]
