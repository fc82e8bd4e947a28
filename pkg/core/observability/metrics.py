"""
metrics.py
Observability - Metrics Collection
Thu thập kết quả từng identity check và tổng hợp theo suite
"""

import json
import time
from collections import deque
from dataclasses import asdict, dataclass, field
from threading import Lock
from typing import Callable, Dict, List, Optional


@dataclass
class CheckEvent:
    """Event khi một identity được kiểm tra trên một poset"""
    suite: str
    subject: str                # rendered poset document
    n: int
    passed: bool
    elapsed: float              # seconds
    timestamp: float = field(default_factory=time.time)


@dataclass
class SuiteSummary:
    """Summary của một suite"""
    suite: str
    checked: int = 0
    passed: int = 0
    failed: int = 0
    per_n: Dict[int, int] = field(default_factory=dict)   # n -> subjects checked
    elapsed: float = 0.0
    failures: List[str] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return self.failed == 0

    def counts_line(self) -> str:
        """'1+2+5+16' in increasing n"""
        return "+".join(str(self.per_n[n]) for n in sorted(self.per_n))

    def to_dict(self) -> dict:
        data = asdict(self)
        data["per_n"] = {str(n): c for n, c in sorted(self.per_n.items())}
        return data


class CheckMetrics:
    """
    📊 OBSERVABILITY - Check Metrics

    Mỗi identity check ghi một CheckEvent; summaries giữ thứ tự suite
    theo lần xuất hiện đầu tiên, để report có thứ tự cố định.
    """

    def __init__(self, max_events: int = 100000):
        self._events: deque = deque(maxlen=max_events)
        self._summaries: Dict[str, SuiteSummary] = {}
        self._session_start = time.time()

        # Thread safety
        self._lock = Lock()

        # Callback for real-time updates
        self.on_check: Optional[Callable[[CheckEvent], None]] = None

    # ==================== RECORDING ====================

    def start_suite(self, suite: str) -> SuiteSummary:
        """Register a suite so it is reported even when it checks nothing"""
        with self._lock:
            return self._summaries.setdefault(suite, SuiteSummary(suite))

    def record(self, suite: str, subject: str, n: int, passed: bool, elapsed: float) -> CheckEvent:
        event = CheckEvent(suite=suite, subject=subject, n=n, passed=passed, elapsed=elapsed)

        with self._lock:
            self._events.append(event)
            summary = self._summaries.setdefault(suite, SuiteSummary(suite))
            summary.checked += 1
            summary.elapsed += elapsed
            summary.per_n[n] = summary.per_n.get(n, 0) + 1
            if passed:
                summary.passed += 1
            else:
                summary.failed += 1
                summary.failures.append(subject)

        if self.on_check:
            self.on_check(event)

        return event

    # ==================== QUERY ====================

    def summary(self, suite: str) -> SuiteSummary:
        with self._lock:
            return self._summaries.get(suite, SuiteSummary(suite))

    def summaries(self) -> List[SuiteSummary]:
        with self._lock:
            return list(self._summaries.values())

    def events(self, suite: Optional[str] = None) -> List[CheckEvent]:
        with self._lock:
            return [e for e in self._events if suite is None or e.suite == suite]

    def all_pass(self) -> bool:
        return all(s.all_pass for s in self.summaries())

    def get_realtime_stats(self) -> dict:
        with self._lock:
            checked = sum(s.checked for s in self._summaries.values())
            failed = sum(s.failed for s in self._summaries.values())
        return {
            "session_duration": time.time() - self._session_start,
            "checked": checked,
            "failed": failed,
        }

    # ==================== EXPORT ====================

    def to_dict(self) -> dict:
        """Deterministic part only: no timestamps or durations"""
        return {
            "all_pass": self.all_pass(),
            "suites": [
                {k: v for k, v in s.to_dict().items() if k != "elapsed"}
                for s in self.summaries()
            ],
        }

    def export_to_json(self, filepath: str):
        """Export all metrics to JSON file"""
        with self._lock:
            events = [asdict(e) for e in self._events]
        data = {
            "session_start": self._session_start,
            "export_time": time.time(),
            "summary": [s.to_dict() for s in self.summaries()],
            "events": events,
        }
        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, ensure_ascii=False)

    def reset(self):
        """Reset all metrics"""
        with self._lock:
            self._events.clear()
            self._summaries.clear()
            self._session_start = time.time()


# Singleton instance
_metrics: Optional[CheckMetrics] = None


def get_metrics() -> CheckMetrics:
    """Get singleton metrics instance"""
    global _metrics

    if _metrics is None:
        _metrics = CheckMetrics()

    return _metrics
