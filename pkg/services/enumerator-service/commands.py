"""
commands.py
One function per subcommand; each writes to `out` and returns the exit code
"""

from typing import List, Optional, Sequence, TextIO

from core.enumerator import (
    antipode_rhs,
    f0,
    f_polynomial,
    fq_poset_cone,
    ppartitions_bruteforce,
    ppartitions_via_extensions,
    zeta_coefficient,
)
from core.errors import SizeError
from core.observability import CheckMetrics, StructuredLogger
from core.poset import Poset
from core.qsym import Composition, antipode, truncate
from core.verification import (
    MAX_SEARCH_N,
    MAX_SURVEY_N,
    SUITES,
    VerifyOptions,
    run_suites,
    search_collision,
    survey,
)

import render
from schemas import PosetDocument

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

LONG_SURVEY_N = 6
LONG_SEARCH_N = 7
LONG_VERIFY_N = 6


class UsageError(Exception):
    """Flag combination the cli refuses (exit 2)"""


def parse_alpha(text: str) -> Composition:
    """'1,3' -> (1,3)"""
    try:
        return Composition(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise UsageError(f"bad composition {text!r}: {exc}") from exc


def _emit(out: TextIO, line: str):
    out.write(line + "\n")


# ==================== ENUMERATORS ====================

def cmd_enumerate(P: Poset,
                  out: TextIO,
                  fmt: str = "text",
                  basis: Optional[str] = None,
                  q0: bool = False,
                  alpha: Optional[str] = None,
                  m: Optional[int] = None) -> int:
    """--alpha prints one coefficient and takes no --basis, --q0 or --m; --m takes no --basis"""
    if alpha is not None and (basis is not None or q0 or m is not None):
        raise UsageError("--alpha cannot be combined with --basis, --q0 or --m")
    if m is not None and basis is not None:
        raise UsageError("--m expands in variables and cannot be combined with --basis")
    basis = basis or "M"

    if alpha is not None:
        composition = parse_alpha(alpha)
        coeff = zeta_coefficient(P, composition)
        if fmt == "json":
            _emit(out, render.dumps(render.qpoly_json(coeff, n=P.n, alpha=list(composition))))
        else:
            _emit(out, render.qpoly_text(coeff))
        return EXIT_OK

    F = f0(P) if q0 else fq_poset_cone(P)
    if m is not None:
        if m < 0:
            raise UsageError(f"--m must be >= 0, got {m}")
        E = truncate(F, m)
        if fmt == "json":
            _emit(out, render.dumps(render.expansion_json(E, n=P.n, q0=q0)))
        else:
            _emit(out, render.expansion_text(E))
        return EXIT_OK

    if fmt == "json":
        _emit(out, render.dumps(render.function_json(F, basis, n=P.n, q0=q0)))
    else:
        _emit(out, render.function_text(F, basis))
    return EXIT_OK


def cmd_fpoly(P: Poset, out: TextIO, fmt: str = "text") -> int:
    f = f_polynomial(P)
    if fmt == "json":
        _emit(out, render.dumps(render.qpoly_json(f, n=P.n)))
    else:
        _emit(out, render.qpoly_text(f))
    return EXIT_OK


def cmd_ppart(P: Poset,
              out: TextIO,
              m: int,
              extensions: bool = False,
              fmt: str = "text",
              basis: str = "M") -> int:
    """Brute-force P-partitions in m variables, or the extension sum in QSym"""
    if m < 0:
        raise UsageError(f"--m must be >= 0, got {m}")
    if extensions:
        F = ppartitions_via_extensions(P)
        if fmt == "json":
            _emit(out, render.dumps(render.function_json(F, basis, n=P.n)))
        else:
            _emit(out, render.function_text(F, basis))
        return EXIT_OK

    E = ppartitions_bruteforce(P, m)
    if fmt == "json":
        _emit(out, render.dumps(render.expansion_json(E, n=P.n)))
    else:
        _emit(out, render.expansion_text(E))
    return EXIT_OK


def cmd_antipode_check(P: Poset, out: TextIO, fmt: str = "text") -> int:
    lhs = antipode(fq_poset_cone(P))
    rhs = antipode_rhs(P)
    holds = lhs == rhs
    if fmt == "json":
        _emit(out, render.dumps({
            "n": P.n,
            "holds": holds,
            "antipode": render.function_json(lhs),
            "flag_sum": render.function_json(rhs),
        }))
    else:
        _emit(out, f"S(F_q)    = {render.function_text(lhs)}")
        _emit(out, f"flag sum  = {render.function_text(rhs)}")
        _emit(out, "antipode identity: " + ("holds" if holds else "FAILS"))
    return EXIT_OK if holds else EXIT_FAILURE


# ==================== VERIFY / SURVEY ====================

def cmd_verify(opts: VerifyOptions,
               out: TextIO,
               suites: Sequence[str] = SUITES,
               long: bool = False,
               as_json: bool = False,
               logger: Optional[StructuredLogger] = None) -> int:
    if opts.max_n >= LONG_VERIFY_N and not long:
        raise UsageError(f"--max-n {opts.max_n} needs --long")
    for suite in suites:
        if suite not in SUITES:
            raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")

    metrics = CheckMetrics()
    reports = run_suites(suites, opts, metrics, logger)

    if as_json:
        data = metrics.to_dict()
        documents = {
            r.suite: [PosetDocument.from_poset(P).model_dump(exclude_none=True) for P in r.counterexamples]
            for r in reports
        }
        for entry in data["suites"]:
            entry["failures"] = documents.get(entry["suite"], [])
        _emit(out, render.dumps(data))
    else:
        for report in reports:
            _emit(out, report.line())
        for report in reports:
            for P in report.counterexamples:
                _emit(out, f"counterexample ({report.suite}): {PosetDocument.from_poset(P).to_json()}")

    return EXIT_OK if all(r.all_pass for r in reports) else EXIT_FAILURE


def cmd_survey(max_n: int,
               out: TextIO,
               long: bool = False,
               logger: Optional[StructuredLogger] = None) -> int:
    if max_n < 1:
        raise UsageError(f"survey --max-n must be >= 1, got {max_n}")
    if max_n > MAX_SURVEY_N:
        raise SizeError(f"survey runs for n <= {MAX_SURVEY_N} (got {max_n})")
    if max_n >= LONG_SURVEY_N and not long:
        raise UsageError(f"survey --max-n {max_n} needs --long")

    levels = survey(max_n, logger)
    collided = False
    for level in levels:
        _emit(out, level.line())
        for first, second in level.collisions:
            collided = True
            _emit(out, f"  collision: {PosetDocument.from_poset(first).to_dsl()}"
                       f"  ~  {PosetDocument.from_poset(second).to_dsl()}")
    return EXIT_FAILURE if collided else EXIT_OK


def cmd_search_collision(n: int,
                         out: TextIO,
                         long: bool = False,
                         logger: Optional[StructuredLogger] = None) -> int:
    if n > MAX_SEARCH_N:
        raise SizeError(f"collision search runs for n <= {MAX_SEARCH_N} (got {n})")
    if n >= LONG_SEARCH_N and not long:
        raise UsageError(f"search-collision --n {n} needs --long")

    found = search_collision(n, logger)
    if not found:
        _emit(out, f"n={n}: no pair found")
        return EXIT_OK

    _emit(out, f"n={n}: {len(found)} pairs with equal F(P) and different F_q(C(P))")
    for sep in found:
        alpha = ",".join(map(str, sep.alpha))
        _emit(out, f"  {PosetDocument.from_poset(sep.first).to_dsl()}  |  "
                   f"{PosetDocument.from_poset(sep.second).to_dsl()}  "
                   f"zeta[{alpha}]: {render.qpoly_text(sep.first_coeff)} vs {render.qpoly_text(sep.second_coeff)}")
    return EXIT_OK


def suite_list(text: Optional[str]) -> List[str]:
    if not text or text == "all":
        return list(SUITES)
    return [s.strip() for s in text.split(",") if s.strip()]
