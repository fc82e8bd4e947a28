"""
demo_core.py
Demo: F_q(C(P)) cho K_{2,2} + f-polynomial + F(P) + antipode identity
"""

import sys
import time
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from core import (
    fq_poset_cone, f_polynomial, f0,
    get_metrics, get_logger,
)
from core.enumerator import antipode_rhs, closed_form_bipartite, ppartitions_bruteforce
from core.geometry import face_lattice, fq_integer_points
from core.poset import complete_bipartite, ideal_flags, rank_of_flag, well_labelling
from core.qsym import antipode, format_qpoly, truncate


def main():
    print("=" * 60)
    print("🧮 CORE MODULE DEMO")
    print("   Poset cone of K_{2,2}: 1,2 < 3,4")
    print("=" * 60)
    print()

    metrics = get_metrics()
    logger = get_logger("demo")
    logger.log_session_start(mode="demo")
    started = time.time()

    P = complete_bipartite(2, 2)

    print("🚩 Flags of ideals and their ranks:")
    for flag in ideal_flags(P):
        print(f"  {flag!r:<16} type {flag.type!r:<10} rank {rank_of_flag(P, flag)}")

    F = fq_poset_cone(P)
    print(f"\n📐 F_q(C(P)) = {F!r}")
    print(f"   closed form agrees: {F == closed_form_bipartite(2, 2)}")

    f = f_polynomial(P)
    print(f"\n🔢 f-polynomial = {format_qpoly(f)}")
    print("   faces:")
    for Q, dim in face_lattice(P):
        rels = " ".join(f"{i}<{j}" for i, j in Q.sorted_relations()) or "(none)"
        print(f"     dim {dim}: {rels}")

    print(f"\n0️⃣  F(P) = {f0(P)!r}")
    for m in (1, 2, 3):
        ok = truncate(f0(P), m) == ppartitions_bruteforce(well_labelling(P), m)
        metrics.record("ppartition", repr(P), P.n, ok, 0.0)
        print(f"   P-partitions agree in {m} variables: {ok}")

    print("\n📏 Integer-point oracle:")
    for m in (1, 2, 3):
        ok = fq_integer_points(P, m) == truncate(F, m)
        metrics.record("oracle", repr(P), P.n, ok, 0.0)
        print(f"   m={m}: {ok}")

    lhs, rhs = antipode(F), antipode_rhs(P)
    metrics.record("antipode", repr(P), P.n, lhs == rhs, 0.0)
    print(f"\n🔁 S(F_q) = {lhs!r}")
    print(f"   flag sum matches: {lhs == rhs}")

    # Print summary
    print("\n" + "=" * 60)
    print("📊 SESSION SUMMARY")
    print("=" * 60)
    for summary in metrics.summaries():
        print(f"  {summary.suite}: {summary.passed}/{summary.checked} pass")

    logger.log_session_end(time.time() - started, metrics.get_realtime_stats())
    print("\n✅ Demo complete!")


if __name__ == "__main__":
    main()
