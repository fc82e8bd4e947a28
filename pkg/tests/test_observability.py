import json

from core.geometry import fq_integer_points
from core.observability import (
    CheckMetrics,
    LogCategory,
    LogEntry,
    LogLevel,
    StructuredLogger,
    get_logger,
    reset_logger,
)
from core.poset import chain


# ==================== METRICS ====================

def test_metrics_summarise_per_suite() -> None:
    metrics = CheckMetrics()
    metrics.start_suite("faces")
    metrics.record("oracle", "point", 1, True, 0.1)
    metrics.record("oracle", "chain2", 2, True, 0.1)
    metrics.record("oracle", "antichain2", 2, False, 0.2)

    oracle = metrics.summary("oracle")
    assert (oracle.checked, oracle.passed, oracle.failed) == (3, 2, 1)
    assert oracle.counts_line() == "1+2"
    assert oracle.failures == ["antichain2"]
    assert not metrics.all_pass()
    assert [s.suite for s in metrics.summaries()] == ["faces", "oracle"]
    assert metrics.summary("faces").counts_line() == ""


def test_metrics_dict_has_no_timings() -> None:
    metrics = CheckMetrics()
    metrics.record("euler", "point", 1, True, 0.5)
    data = metrics.to_dict()
    assert data == {
        "all_pass": True,
        "suites": [{
            "suite": "euler",
            "checked": 1,
            "passed": 1,
            "failed": 0,
            "per_n": {"1": 1},
            "failures": [],
        }],
    }


def test_metrics_callback_and_reset() -> None:
    metrics = CheckMetrics()
    seen = []
    metrics.on_check = seen.append
    metrics.record("hopf", "point", 1, True, 0.0)
    assert [e.subject for e in seen] == ["point"]
    assert metrics.get_realtime_stats()["checked"] == 1
    metrics.reset()
    assert metrics.summaries() == []
    assert metrics.events() == []


def test_metrics_export(tmp_path) -> None:
    metrics = CheckMetrics()
    metrics.record("faces", "k22", 4, True, 0.25)
    target = tmp_path / "metrics.json"
    metrics.export_to_json(str(target))
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["summary"][0]["suite"] == "faces"
    assert data["events"][0]["subject"] == "k22"


# ==================== LOGGER ====================

def test_log_entry_rendering() -> None:
    entry = LogEntry(
        timestamp="2024-01-01 00:00:00.000",
        level="INFO",
        category="VERIFY",
        message="oracle: 16/16 pass",
        data={"suite": "oracle"},
    )
    assert entry.to_console() == "[2024-01-01 00:00:00.000] ✅ VERIFY: oracle: 16/16 pass | suite=oracle"
    assert json.loads(entry.to_json())["data"] == {"suite": "oracle"}


def test_logger_writes_jsonl_when_dir_given(tmp_path) -> None:
    logger = StructuredLogger(service_name="test-jsonl", log_dir=str(tmp_path))
    logger.verify("oracle done", checked=16)
    logger.log_counterexample("antipode", "chain2")

    lines = logger.log_file.read_text(encoding="utf-8").splitlines()
    records = [json.loads(line) for line in lines]
    assert [r["category"] for r in records] == ["VERIFY", "ERROR"]
    assert records[0]["data"] == {"checked": 16}
    assert records[1]["level"] == "ERROR"


def test_logger_without_dir_writes_no_file() -> None:
    logger = StructuredLogger(service_name="test-nofile")
    logger.log(LogCategory.SYSTEM, "hello", level=LogLevel.INFO)
    assert logger.log_file is None


def test_console_goes_to_stderr_only(capsys) -> None:
    logger = StructuredLogger(service_name="test-console")
    logger.warning("careful")
    logger.verify("below threshold")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "careful" in captured.err
    assert "below threshold" not in captured.err


def test_singleton_reset() -> None:
    reset_logger()
    first = get_logger("test-singleton")
    assert get_logger() is first
    reset_logger()
    assert get_logger("test-singleton") is not first
    reset_logger()


def test_oracle_runs_are_logged(tmp_path) -> None:
    reset_logger()
    try:
        logger = get_logger("test-oracle", log_dir=str(tmp_path))
        fq_integer_points(chain(2), 2)
        records = [json.loads(line) for line in logger.log_file.read_text(encoding="utf-8").splitlines()]
        oracle = [r for r in records if r["category"] == "ORACLE"]
        assert len(oracle) == 1
        assert oracle[0]["level"] == "DEBUG"
        assert oracle[0]["data"] == {"n": 2, "m": 2, "vectors": 3}
    finally:
        reset_logger()
