"""
Observability Module
"""

from .metrics import CheckMetrics, CheckEvent, SuiteSummary, get_metrics
from .logger import StructuredLogger, LogEntry, LogLevel, LogCategory, get_logger, reset_logger

__all__ = [
    "CheckMetrics",
    "CheckEvent",
    "SuiteSummary",
    "get_metrics",
    "StructuredLogger",
    "LogEntry",
    "LogLevel",
    "LogCategory",
    "get_logger",
    "reset_logger",
]
