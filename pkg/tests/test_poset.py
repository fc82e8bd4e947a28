import random

import pytest

from core.errors import CycleError, FlagError, SizeError
from core.poset import (
    IdealFlag,
    Poset,
    SubposetRelation,
    all_posets,
    antichain,
    canonical_form,
    chain,
    circuits,
    complete_bipartite,
    connected_components,
    count_ideal_flags,
    covers,
    disjoint_union,
    flag_of,
    ideal_flags,
    ideals,
    is_connected,
    is_ideal,
    is_isomorphic,
    is_positive_subposet,
    is_tree_hasse,
    is_well_labelled,
    linear_extensions,
    maximal_elements,
    minimal_elements,
    opposite,
    poset_coproduct,
    poset_from_relations,
    quotient,
    random_poset,
    random_relabel,
    random_tree_poset,
    rank,
    rank_of_flag,
    restriction,
    series_composition,
    star,
    well_labelling,
)
from core.poset.canonical import from_canonical_form


# ==================== CONSTRUCTION ====================

def test_relations_are_closed_on_load() -> None:
    P = poset_from_relations(3, [(1, 2), (2, 3)])
    assert P.less_than == frozenset({(1, 2), (2, 3), (1, 3)})
    assert P.below(3) == frozenset({1, 2})
    assert P.above(1) == frozenset({2, 3})


def test_cycle_is_rejected() -> None:
    with pytest.raises(CycleError):
        poset_from_relations(3, [(1, 2), (2, 3), (3, 1)])
    with pytest.raises(CycleError):
        poset_from_relations(2, [(1, 1)])


def test_label_outside_ground_set_is_index_error() -> None:
    with pytest.raises(IndexError):
        poset_from_relations(2, [(1, 3)])


def test_named_families() -> None:
    assert chain(3).less_than == frozenset({(1, 2), (2, 3), (1, 3)})
    assert star(3).less_than == frozenset({(1, 3), (2, 3)})
    assert complete_bipartite(2, 2).sorted_relations() == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert antichain(4).less_than == frozenset()
    assert disjoint_union(chain(2), chain(1)).less_than == frozenset({(1, 2)})
    assert series_composition(antichain(2), antichain(2)) == complete_bipartite(2, 2)
    assert opposite(chain(2)).less_than == frozenset({(2, 1)})


def test_structure_queries(k22) -> None:
    assert covers(chain(3)) == frozenset({(1, 2), (2, 3)})
    assert maximal_elements(k22) == frozenset({3, 4})
    assert minimal_elements(k22) == frozenset({1, 2})
    assert connected_components(disjoint_union(chain(2), chain(2))) == [frozenset({1, 2}), frozenset({3, 4})]
    assert is_connected(k22)
    assert not is_connected(antichain(2))
    assert rank(k22) == 3
    assert rank(antichain(3)) == 0


def test_tree_hasse() -> None:
    assert is_tree_hasse(star(4))
    assert is_tree_hasse(chain(5))
    assert not is_tree_hasse(complete_bipartite(2, 2))
    rng = random.Random(7)
    for n in range(1, 8):
        assert is_tree_hasse(random_tree_poset(n, rng))


def test_restriction_relabels_increasingly(k22) -> None:
    R = restriction(k22, {2, 3, 4})
    assert R == Poset(3, frozenset({(1, 2), (1, 3)}))


# ==================== IDEALS AND FLAGS ====================

def test_ideals_of_k22(k22) -> None:
    found = [tuple(sorted(S)) for S in ideals(k22)]
    assert found == [(), (1,), (2,), (1, 2), (1, 2, 3), (1, 2, 4), (1, 2, 3, 4)]
    assert is_ideal(k22, {1, 2, 3})
    assert not is_ideal(k22, {1, 3})


def test_flag_counts() -> None:
    assert count_ideal_flags(chain(3)) == 4
    # ordered set partitions of a 3-set
    assert count_ideal_flags(antichain(3)) == 13
    assert count_ideal_flags(complete_bipartite(2, 2)) == 18
    assert list(ideal_flags(Poset(0))) == [IdealFlag(())]


def test_flags_are_ordered_by_length_then_blocks() -> None:
    flags = list(ideal_flags(antichain(2)))
    assert [f.sorted_blocks() for f in flags] == [((1, 2),), ((1,), (2,)), ((2,), (1,))]


def test_flag_validation(k22) -> None:
    flag = flag_of(k22, [[1], [2, 3, 4]])
    assert flag.type == (1, 3)
    assert flag.level(3) == 2
    assert flag.opposite().sorted_blocks() == ((2, 3, 4), (1,))
    with pytest.raises(FlagError):
        flag_of(k22, [[3], [1, 2, 4]])
    with pytest.raises(FlagError):
        IdealFlag((frozenset({1, 2}), frozenset({2, 3})))
    with pytest.raises(FlagError):
        IdealFlag((frozenset({1}), frozenset({3})))


def test_quotient_and_rank(k22) -> None:
    flag = flag_of(k22, [[1], [2, 3, 4]])
    Q = quotient(k22, flag)
    assert Q.sorted_relations() == [(2, 3), (2, 4)]
    assert rank_of_flag(k22, flag) == 2
    split = flag_of(k22, [[1, 2], [3, 4]])
    assert quotient(k22, split).is_discrete
    assert rank_of_flag(k22, split) == 0


def test_rank_of_flag_equals_quotient_rank_everywhere() -> None:
    for n in range(1, 5):
        for P in all_posets(n):
            for flag in ideal_flags(P):
                assert rank_of_flag(P, flag) == rank(quotient(P, flag))


def test_poset_coproduct_matches_ideals(k22) -> None:
    pieces = poset_coproduct(k22)
    assert len(pieces) == 7
    assert pieces[0] == (Poset(0), k22)
    assert pieces[-1] == (k22, Poset(0))


# ==================== EXTENSIONS AND LABELLINGS ====================

def test_linear_extensions() -> None:
    assert list(linear_extensions(antichain(2))) == [(1, 2), (2, 1)]
    assert list(linear_extensions(chain(3))) == [(1, 2, 3)]
    assert len(list(linear_extensions(complete_bipartite(2, 2)))) == 4


def test_well_labelling_is_isomorphic_and_well_labelled() -> None:
    for n in range(1, 5):
        for P in all_posets(n):
            L = well_labelling(P)
            assert is_well_labelled(L)
            assert is_isomorphic(L, P)


# ==================== CANONICAL FORMS ====================

def test_class_counts() -> None:
    assert [len(list(all_posets(n))) for n in range(0, 6)] == [1, 1, 2, 5, 16, 63]


@pytest.mark.slow
def test_class_count_six() -> None:
    assert len(list(all_posets(6))) == 318


def test_canonical_form_is_relabelling_invariant() -> None:
    rng = random.Random(11)
    for _ in range(30):
        P = random_poset(5, rng)
        Q = random_relabel(P, rng)
        assert canonical_form(P) == canonical_form(Q)
        assert is_isomorphic(from_canonical_form(canonical_form(P)), P)


def test_class_bounds() -> None:
    with pytest.raises(SizeError):
        list(all_posets(7))
    with pytest.raises(SizeError):
        canonical_form(antichain(9))


# ==================== POSITIVITY ====================

def test_circuits() -> None:
    assert list(circuits(complete_bipartite(2, 2))) == [(1, 3, 2, 4)]
    assert list(circuits(chain(3))) == [(1, 2, 3)]
    assert list(circuits(star(4))) == []


def test_positive_subposets_of_k22(k22) -> None:
    assert is_positive_subposet(k22, SubposetRelation.of(k22, [(1, 3), (1, 4)]))
    assert is_positive_subposet(k22, SubposetRelation.of(k22, [(1, 3)]))
    assert not is_positive_subposet(k22, SubposetRelation.of(k22, [(1, 3), (2, 4)]))


def test_positive_subposets_of_chain() -> None:
    P = chain(3)
    assert is_positive_subposet(P, SubposetRelation.of(P, [(1, 2)]))
    assert not is_positive_subposet(P, SubposetRelation.of(P, [(1, 3)]))


# ==================== INVARIANTS ====================

def test_flag_counts_of_chains_and_antichains() -> None:
    ordered_set_partitions = [1, 3, 13, 75, 541, 4683]
    for n in range(1, 7):
        assert count_ideal_flags(chain(n)) == 2 ** (n - 1)
        assert count_ideal_flags(antichain(n)) == ordered_set_partitions[n - 1]


def test_opposite_poset_has_opposite_flags() -> None:
    for n in range(1, 5):
        for P in all_posets(n):
            reversed_flags = {flag.opposite() for flag in ideal_flags(P)}
            assert set(ideal_flags(opposite(P))) == reversed_flags


def test_quotients_are_positive_subposets() -> None:
    for n in range(1, 5):
        for P in all_posets(n):
            for flag in ideal_flags(P):
                assert is_positive_subposet(P, quotient(P, flag))


def test_linear_extension_counts() -> None:
    factorials = [1, 1, 2, 6, 24, 120]
    for n in range(0, 6):
        assert len(list(linear_extensions(antichain(n)))) == factorials[n]
        assert len(list(linear_extensions(chain(n)))) == 1
