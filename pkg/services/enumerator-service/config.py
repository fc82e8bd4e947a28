"""
config.py
Configuration cho Enumerator Service
"""

import os
from dataclasses import dataclass, field
from pathlib import Path

try:
    from dotenv import load_dotenv
    for env_path in (Path(__file__).parent / '.env', Path(__file__).parent.parent.parent / '.env'):
        if env_path.exists():
            load_dotenv(env_path)
except ImportError:
    pass


def _env_int(name: str, default: int):
    return field(default_factory=lambda: int(os.getenv(name, str(default))))


@dataclass
class Config:
    """Enumerator Service Configuration (read from the environment on construction)"""

    # Verification scope
    QSYM_MAX_N: int = _env_int("QSYM_MAX_N", 5)
    QSYM_TRUNC_M: int = _env_int("QSYM_TRUNC_M", 4)
    QSYM_THREADS: int = _env_int("QSYM_THREADS", 1)

    # Randomized checks
    QSYM_RANDOM_SEED: int = _env_int("QSYM_RANDOM_SEED", 2024)
    QSYM_RANDOM_LABELLINGS: int = _env_int("QSYM_RANDOM_LABELLINGS", 5)
    QSYM_RANDOM_ANTIPODE_POSETS: int = _env_int("QSYM_RANDOM_ANTIPODE_POSETS", 20)

    # Logging ("" = console only)
    LOG_DIR: str = field(default_factory=lambda: os.getenv("LOG_DIR", ""))

    # Debug
    DEBUG: bool = field(default_factory=lambda: os.getenv("DEBUG", "false").lower() == "true")

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not 1 <= self.QSYM_MAX_N <= 6:
            raise ValueError(f"QSYM_MAX_N must be in 1..6, got {self.QSYM_MAX_N}")
        if not 1 <= self.QSYM_TRUNC_M <= 6:
            raise ValueError(f"QSYM_TRUNC_M must be in 1..6, got {self.QSYM_TRUNC_M}")
        if self.QSYM_THREADS < 1:
            raise ValueError(f"QSYM_THREADS must be >= 1, got {self.QSYM_THREADS}")
        if self.QSYM_RANDOM_LABELLINGS < 0 or self.QSYM_RANDOM_ANTIPODE_POSETS < 0:
            raise ValueError("random check counts must be >= 0")

