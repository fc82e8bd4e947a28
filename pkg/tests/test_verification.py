import pytest

from core.errors import SizeError
from core.observability import CheckMetrics, StructuredLogger
from core.poset import antichain, chain, is_isomorphic
from core.qsym import Composition
from core.verification import (
    SUITES,
    VerifyOptions,
    run_suite,
    run_suites,
    search_collision,
    separating_alpha,
    survey,
)


@pytest.fixture
def quiet_logger():
    return StructuredLogger(service_name="test-verification")


# ==================== SUITES ====================

def test_oracle_suite_line(quiet_logger) -> None:
    opts = VerifyOptions(max_n=4, trunc_m=3)
    report = run_suite("oracle", opts, CheckMetrics(), quiet_logger)
    assert report.all_pass
    assert report.line() == "oracle: 1+2+5+16 posets, all pass"


def test_every_suite_passes_up_to_four(quiet_logger) -> None:
    opts = VerifyOptions(max_n=4, trunc_m=3, random_labellings=2)
    metrics = CheckMetrics()
    reports = run_suites(SUITES, opts, metrics, quiet_logger)
    assert [r.suite for r in reports] == list(SUITES)
    for report in reports:
        assert report.all_pass, report.line()
    assert metrics.all_pass()
    assert [s.suite for s in metrics.summaries()] == list(SUITES)


def test_antipode_suite_samples_random_posets_past_four(quiet_logger) -> None:
    opts = VerifyOptions(max_n=5, trunc_m=2, random_antipode_posets=3)
    report = run_suite("antipode", opts, CheckMetrics(), quiet_logger)
    assert report.all_pass
    assert report.line() == "antipode: 1+2+5+16+3 posets, all pass"


def test_default_scope_passes_every_suite(quiet_logger) -> None:
    reports = run_suites(SUITES, VerifyOptions(), CheckMetrics(), quiet_logger)
    lines = {r.suite: r.line() for r in reports}
    assert lines["oracle"] == "oracle: 1+2+5+16+63 posets, all pass"
    assert lines["antipode"] == "antipode: 1+2+5+16+20 posets, all pass"
    assert lines["opposite"] == "opposite: 1+2+5+16+63 posets, all pass"
    for report in reports:
        assert report.all_pass, report.line()


def test_thread_count_does_not_change_the_report(quiet_logger) -> None:
    single = CheckMetrics()
    pooled = CheckMetrics()
    run_suites(["opposite", "euler"], VerifyOptions(max_n=4, threads=1), single, quiet_logger)
    run_suites(["opposite", "euler"], VerifyOptions(max_n=4, threads=4), pooled, quiet_logger)
    assert single.to_dict() == pooled.to_dict()
    assert [e.subject for e in single.events()] == [e.subject for e in pooled.events()]


def test_unknown_suite_is_rejected(quiet_logger) -> None:
    with pytest.raises(ValueError):
        run_suite("nonsense", VerifyOptions(max_n=1), CheckMetrics(), quiet_logger)


# ==================== SURVEY ====================

def test_survey_up_to_five(quiet_logger) -> None:
    levels = survey(5, quiet_logger)
    assert [level.classes for level in levels] == [1, 2, 5, 16, 63]
    assert all(not level.collisions for level in levels)
    assert levels[-1].line() == "n=5: 63 classes, 0 collisions"


def test_survey_bounds(quiet_logger) -> None:
    with pytest.raises(SizeError):
        survey(7, quiet_logger)
    with pytest.raises(SizeError):
        search_collision(8, quiet_logger)
    with pytest.raises(SizeError):
        search_collision(0, quiet_logger)


def test_no_collision_at_four(quiet_logger) -> None:
    assert search_collision(4, quiet_logger) == []


def test_separating_alpha() -> None:
    assert separating_alpha(chain(2), antichain(2)) == Composition((2,))
    assert separating_alpha(chain(3), chain(3)) is None


@pytest.mark.slow
def test_survey_six(quiet_logger) -> None:
    levels = survey(6, quiet_logger)
    assert levels[-1].line() == "n=6: 318 classes, 0 collisions"


@pytest.mark.slow
def test_collision_search_at_seven(quiet_logger) -> None:
    found = search_collision(7, quiet_logger)
    assert found
    for pair in found:
        assert not is_isomorphic(pair.first, pair.second)
        assert pair.first_coeff != pair.second_coeff
        assert sum(pair.alpha) == 7
