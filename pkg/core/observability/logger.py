"""
logger.py
Structured Logging cho enumerator engine

Console records go to stderr so command output on stdout stays
byte-identical; the JSONL file is written only when a log dir is set.
"""

import json
import logging
import sys
from dataclasses import asdict, dataclass
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional


class LogLevel(Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class LogCategory(Enum):
    """Các category log"""
    ENUMERATE = "ENUMERATE"   # F_q / F / f-polynomial computations
    VERIFY = "VERIFY"         # Identity suites
    SURVEY = "SURVEY"         # Distinguishing survey, collision search
    ORACLE = "ORACLE"         # Integer-point and face-lattice oracles
    SYSTEM = "SYSTEM"         # System events
    ERROR = "ERROR"           # Errors
    METRIC = "METRIC"         # Metrics events


@dataclass
class LogEntry:
    """Structured log entry"""
    timestamp: str
    level: str
    category: str
    message: str
    data: Dict[str, Any]

    # Optional context
    session_id: Optional[str] = None
    service: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False, default=str)

    def to_console(self) -> str:
        """Format for console output"""
        emoji = {
            "ENUMERATE": "🧮",
            "VERIFY": "✅",
            "SURVEY": "🔍",
            "ORACLE": "📐",
            "SYSTEM": "⚙️",
            "ERROR": "❌",
            "METRIC": "📊",
        }.get(self.category, "•")

        data_str = ""
        if self.data:
            data_str = " | " + " ".join(f"{k}={v}" for k, v in self.data.items())

        return f"[{self.timestamp}] {emoji} {self.category}: {self.message}{data_str}"


_LEVELS = {
    LogLevel.DEBUG: logging.DEBUG,
    LogLevel.INFO: logging.INFO,
    LogLevel.WARNING: logging.WARNING,
    LogLevel.ERROR: logging.ERROR,
    LogLevel.CRITICAL: logging.CRITICAL,
}


class StructuredLogger:
    """
    📝 Structured Logger

    Outputs:
    - Console on stderr (human-readable)
    - JSON lines file (machine-readable), only if log_dir is given
    """

    def __init__(self,
                 service_name: str = "qsym-enumerator",
                 log_dir: Optional[str] = None,
                 console_level: LogLevel = LogLevel.WARNING,
                 file_level: LogLevel = LogLevel.DEBUG):

        self.service_name = service_name
        self.console_level = console_level
        self.file_level = file_level

        # Session ID for this run
        self.session_id = datetime.now().strftime("%Y%m%d_%H%M%S")

        self.log_file: Optional[Path] = None
        if log_dir:
            directory = Path(log_dir)
            directory.mkdir(parents=True, exist_ok=True)
            self.log_file = directory / f"{service_name}_{self.session_id}.jsonl"

        self._setup_python_logger()

    def _setup_python_logger(self):
        """Setup standard Python logger"""
        self.logger = logging.getLogger(self.service_name)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        # Re-created loggers replace their console handler instead of stacking
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)

        console = logging.StreamHandler(sys.stderr)
        console.setLevel(_LEVELS[self.console_level])
        console.setFormatter(logging.Formatter('%(message)s'))
        self.logger.addHandler(console)

    def set_console_level(self, level: LogLevel):
        self.console_level = level
        for handler in self.logger.handlers:
            handler.setLevel(_LEVELS[level])

    def log(self,
            category: LogCategory,
            message: str,
            data: Dict[str, Any] = None,
            level: LogLevel = LogLevel.INFO):
        """Main log method"""

        entry = LogEntry(
            timestamp=datetime.now().strftime("%Y-%m-%d %H:%M:%S.%f")[:-3],
            level=level.value,
            category=category.value,
            message=message,
            data=data or {},
            session_id=self.session_id,
            service=self.service_name,
        )

        # Console
        self.logger.log(_LEVELS[level], entry.to_console())

        # File
        if self.log_file is not None and _LEVELS[level] >= _LEVELS[self.file_level]:
            with open(self.log_file, 'a', encoding='utf-8') as f:
                f.write(entry.to_json() + '\n')

    # ==================== CONVENIENCE METHODS ====================

    def enumerate(self, message: str, **kwargs):
        """Log an enumerator computation"""
        self.log(LogCategory.ENUMERATE, message, kwargs, level=LogLevel.DEBUG)

    def verify(self, message: str, **kwargs):
        """Log a verification event"""
        self.log(LogCategory.VERIFY, message, kwargs)

    def survey(self, message: str, **kwargs):
        self.log(LogCategory.SURVEY, message, kwargs)

    def oracle(self, message: str, **kwargs):
        self.log(LogCategory.ORACLE, message, kwargs, level=LogLevel.DEBUG)

    def system(self, message: str, **kwargs):
        """Log system event"""
        self.log(LogCategory.SYSTEM, message, kwargs)

    def metric(self, message: str, **kwargs):
        """Log metric event"""
        self.log(LogCategory.METRIC, message, kwargs)

    def error(self, message: str, **kwargs):
        """Log error"""
        self.log(LogCategory.ERROR, message, kwargs, level=LogLevel.ERROR)

    def warning(self, message: str, **kwargs):
        """Log warning"""
        self.log(LogCategory.SYSTEM, message, kwargs, level=LogLevel.WARNING)

    def debug(self, message: str, **kwargs):
        """Log debug info"""
        self.log(LogCategory.SYSTEM, message, kwargs, level=LogLevel.DEBUG)

    # ==================== SPECIAL LOGS ====================

    def log_suite_result(self, suite: str, checked: int, failed: int, elapsed: float):
        """Log one suite summary with standard format"""
        self.log(
            LogCategory.VERIFY,
            f"{suite}: {checked - failed}/{checked} pass",
            {"suite": suite, "checked": checked, "failed": failed,
             "elapsed": f"{elapsed:.2f}s"},
            level=LogLevel.INFO if not failed else LogLevel.WARNING,
        )

    def log_counterexample(self, suite: str, poset: str, detail: str = ""):
        """Log an identity failure"""
        self.error(
            f"{suite} failed on {poset}",
            suite=suite,
            poset=poset,
            detail=detail,
        )

    def log_session_start(self, **config):
        """Log session start"""
        self.system(
            "Session started",
            session_id=self.session_id,
            **config
        )

    def log_session_end(self, duration: float, stats: dict):
        """Log session end with stats"""
        self.system(
            f"Session ended after {duration:.1f}s",
            **stats
        )


# Singleton instance
_logger: Optional[StructuredLogger] = None


def get_logger(service_name: str = "qsym-enumerator",
               log_dir: Optional[str] = None) -> StructuredLogger:
    """Get singleton logger instance"""
    global _logger

    if _logger is None:
        _logger = StructuredLogger(service_name=service_name, log_dir=log_dir)

    return _logger


def reset_logger():
    """Drop the singleton (the cli re-creates it with its config)"""
    global _logger
    _logger = None
