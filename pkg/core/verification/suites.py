"""
suites.py
Identity suites run exhaustively over isomorphism classes

Every suite turns into a list of (poset, check) tasks; tasks run through
a thread pool whose map keeps the canonical poset order, so reports are
identical for any thread count.
"""

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..enumerator import (
    antipode_identity_check,
    coproduct_check,
    f0,
    f_polynomial,
    fq_poset_cone,
    opposite_identity_check,
    ppartitions_bruteforce,
    ppartitions_via_extensions,
    product_check,
    tree_f_polynomial,
)
from ..geometry import (
    MAX_SUBPOSET_N,
    euler_flag_identity,
    f_vector_polynomial,
    fq_integer_points,
    positive_subposet_cross_check,
)
from ..observability.logger import StructuredLogger, get_logger
from ..observability.metrics import CheckMetrics, SuiteSummary
from ..poset import Poset, all_posets, is_tree_hasse, random_poset, random_relabel, well_labelling
from ..qsym import truncate

SUITES = ("oracle", "antipode", "opposite", "hopf", "ppartition", "euler", "faces")

ANTIPODE_EXHAUSTIVE_N = 4
EXTENSION_IDENTITY_N = 4


@dataclass
class VerifyOptions:
    """Scope of one verify run"""
    max_n: int = 5
    trunc_m: int = 4
    threads: int = 1
    seed: int = 2024
    random_labellings: int = 5
    random_antipode_posets: int = 20


@dataclass
class Task:
    subject: Poset
    check: Callable[[], bool]


@dataclass
class SuiteReport:
    suite: str
    summary: SuiteSummary
    counterexamples: List[Poset] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return not self.counterexamples

    def line(self) -> str:
        """'oracle: 1+2+5+16 posets, all pass'"""
        counts = self.summary.counts_line() or "0"
        status = "all pass" if self.all_pass else f"{len(self.counterexamples)} failed"
        return f"{self.suite}: {counts} posets, {status}"


def _classes(max_n: int) -> List[Poset]:
    return [P for n in range(1, max_n + 1) for P in all_posets(n)]


# ==================== TASK BUILDERS ====================

def _oracle_tasks(opts: VerifyOptions) -> List[Task]:
    def check(P: Poset) -> bool:
        F = fq_poset_cone(P)
        return all(fq_integer_points(P, m) == truncate(F, m) for m in range(1, opts.trunc_m + 1))

    return [Task(P, lambda P=P: check(P)) for P in _classes(opts.max_n)]


def _antipode_tasks(opts: VerifyOptions) -> List[Task]:
    tasks = [
        Task(P, lambda P=P: antipode_identity_check(P))
        for P in _classes(min(opts.max_n, ANTIPODE_EXHAUSTIVE_N))
    ]
    if opts.max_n > ANTIPODE_EXHAUSTIVE_N:
        rng = random.Random(opts.seed)
        for _ in range(opts.random_antipode_posets):
            P = random_poset(ANTIPODE_EXHAUSTIVE_N + 1, rng)
            tasks.append(Task(P, lambda P=P: antipode_identity_check(P)))
    return tasks


def _opposite_tasks(opts: VerifyOptions) -> List[Task]:
    return [Task(P, lambda P=P: opposite_identity_check(P)) for P in _classes(opts.max_n)]


def _hopf_tasks(opts: VerifyOptions) -> List[Task]:
    classes = _classes(opts.max_n)

    def check(P: Poset) -> bool:
        if not coproduct_check(P):
            return False
        return all(product_check(P, Q) for Q in classes if P.n + Q.n <= opts.max_n)

    return [Task(P, lambda P=P: check(P)) for P in classes]


def _ppartition_tasks(opts: VerifyOptions) -> List[Task]:
    rng = random.Random(opts.seed)
    tasks = []
    for P in _classes(opts.max_n):
        labellings: Tuple[Poset, ...] = ()
        if P.n <= EXTENSION_IDENTITY_N:
            # drawn here, in class order, so the run is seed-deterministic
            labellings = tuple(random_relabel(P, rng) for _ in range(opts.random_labellings))

        def check(P: Poset = P, labellings: Tuple[Poset, ...] = labellings) -> bool:
            F = f0(P)
            labelled = well_labelling(P)
            for m in range(1, opts.trunc_m + 1):
                if truncate(F, m) != ppartitions_bruteforce(labelled, m):
                    return False
                for L in labellings:
                    if truncate(ppartitions_via_extensions(L), m) != ppartitions_bruteforce(L, m):
                        return False
            return True

        tasks.append(Task(P, check))
    return tasks


def _euler_tasks(opts: VerifyOptions) -> List[Task]:
    return [Task(P, lambda P=P: euler_flag_identity(P)) for P in _classes(opts.max_n)]


def _faces_tasks(opts: VerifyOptions) -> List[Task]:
    def check(P: Poset) -> bool:
        f = f_polynomial(P)
        if f_vector_polynomial(P) != f:
            return False
        if is_tree_hasse(P) and f != tree_f_polynomial(P.n):
            return False
        if P.n <= MAX_SUBPOSET_N and not positive_subposet_cross_check(P):
            return False
        return True

    return [Task(P, lambda P=P: check(P)) for P in _classes(opts.max_n)]


_BUILDERS: Dict[str, Callable[[VerifyOptions], List[Task]]] = {
    "oracle": _oracle_tasks,
    "antipode": _antipode_tasks,
    "opposite": _opposite_tasks,
    "hopf": _hopf_tasks,
    "ppartition": _ppartition_tasks,
    "euler": _euler_tasks,
    "faces": _faces_tasks,
}


# ==================== RUNNER ====================

def _timed(task: Task) -> Tuple[bool, float]:
    start = time.perf_counter()
    passed = bool(task.check())
    return passed, time.perf_counter() - start


def run_suite(suite: str,
              opts: VerifyOptions,
              metrics: Optional[CheckMetrics] = None,
              logger: Optional[StructuredLogger] = None) -> SuiteReport:
    if suite not in _BUILDERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")

    metrics = metrics or CheckMetrics()
    logger = logger or get_logger()
    metrics.start_suite(suite)

    tasks = _BUILDERS[suite](opts)
    logger.verify(f"Running {suite}", tasks=len(tasks), max_n=opts.max_n, threads=opts.threads)

    with ThreadPoolExecutor(max_workers=max(opts.threads, 1)) as pool:
        outcomes = list(pool.map(_timed, tasks))

    report = SuiteReport(suite, metrics.summary(suite))
    for task, (passed, elapsed) in zip(tasks, outcomes):
        metrics.record(suite, repr(task.subject), task.subject.n, passed, elapsed)
        if not passed:
            report.counterexamples.append(task.subject)
            logger.log_counterexample(suite, repr(task.subject))

    report.summary = metrics.summary(suite)
    logger.log_suite_result(suite, report.summary.checked, report.summary.failed, report.summary.elapsed)
    return report


def run_suites(suites: Sequence[str],
               opts: VerifyOptions,
               metrics: Optional[CheckMetrics] = None,
               logger: Optional[StructuredLogger] = None) -> List[SuiteReport]:
    metrics = metrics or CheckMetrics()
    return [run_suite(suite, opts, metrics, logger) for suite in suites]
