"""
Verification Module - identity suites and the distinguishing survey
"""

from .suites import SUITES, VerifyOptions, SuiteReport, run_suite, run_suites
from .survey import (
    MAX_SURVEY_N,
    MAX_SEARCH_N,
    SurveyLevel,
    Separation,
    survey,
    search_collision,
    separating_alpha,
)

__all__ = [
    "SUITES",
    "VerifyOptions",
    "SuiteReport",
    "run_suite",
    "run_suites",
    "MAX_SURVEY_N",
    "MAX_SEARCH_N",
    "SurveyLevel",
    "Separation",
    "survey",
    "search_collision",
    "separating_alpha",
]
