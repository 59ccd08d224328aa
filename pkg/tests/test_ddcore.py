import pytest

from ddwreath.construction import build_design
from ddwreath.ddcore import (
    Partition,
    RankSummary,
    check_counting_identities,
    check_max_rank_conditions,
    check_rank_bounds,
    dd_from_block,
    design_params,
    inner_outer_counts,
    verify_orbital_pair_counts,
)
from ddwreath.errors import DomainError, NotDDConsistent
from ddwreath.permgrp import cyclic_group, orbitals, symmetric_group
from ddwreath.singer import build_plane, singer_partition


def test_partition_validation():
    P = Partition.from_classes([[0, 2, 4], [1, 3, 5]])
    assert (P.c, P.d, P.v) == (3, 2, 6)
    assert P.classes() == [[0, 2, 4], [1, 3, 5]]
    with pytest.raises(DomainError):
        Partition.from_classes([[0, 1, 2, 3, 4, 5]])
    with pytest.raises(DomainError):
        Partition.from_classes([[0, 1], [2, 3, 4]])


def test_dd_from_construction_block():
    design = build_design((2, 13))
    dd = dd_from_block(design.block_codes, design.partition)
    assert (dd.m, dd.n) == (1, 2)
    assert dd.inner_count + dd.outer_count == 15


def test_dd_from_pg24_line_matches_brute_force():
    plane = build_plane(4)
    P = singer_partition(plane, 3, 7)
    for line in plane.lines:
        inner = sum(1 for i, a in enumerate(line) for b in line[i + 1:] if a % 7 == b % 7)
        assert inner == 1
        dd = dd_from_block(line, P)
        assert (dd.m, dd.n) == (3, 1)
        assert dd.m == (7 - 1) // 2


def test_block_inside_one_class_is_not_dd_consistent():
    P = Partition.from_classes([[0, 1], [2, 3]])
    with pytest.raises(NotDDConsistent) as err:
        dd_from_block([0, 1], P)
    assert (err.value.inner, err.value.outer) == (1, 0)


def test_eq2_failure_is_an_error():
    # k = 3 on 3 classes of size 2: one inner + two outer pairs, m = 1, n = 1 gives d = 2 != 3
    P = Partition.from_classes([[0, 1], [2, 3], [4, 5]])
    assert inner_outer_counts([0, 1, 2], P) == (1, 2)
    with pytest.raises(NotDDConsistent):
        dd_from_block([0, 1, 2], P)


def test_counting_identities_construction():
    rep = check_counting_identities(13, 7, 6, 1, 2)
    assert rep.ok and "counting.c" not in rep
    assert rep["counting.a"].witness["cd_minus_1"] == 90
    rep = check_counting_identities(13, 7, 6, 1, 2, 197730)
    assert rep.ok and rep["counting.c"].witness["b"] == 53_980_290
    rep = check_counting_identities(13, 7, 6, 1, 2, 395460)
    assert rep["counting.c"].witness["b"] == 107_960_580


def test_counting_identities_singer_q4():
    rep = check_counting_identities(3, 7, 5, 3, 1, 1)
    assert rep.ok
    assert rep["counting.c"].witness["b"] == 21


def test_counting_identities_report_failures():
    rep = check_counting_identities(13, 7, 6, 2, 2)
    assert not rep.ok
    assert {ch.check_id for ch in rep.failures} == {"counting.a", "counting.b"}


def test_rank_bounds():
    H = RankSummary(rank=3, pair_rank=2)
    assert check_rank_bounds(H, RankSummary(2, 1), 1, 2).ok
    assert check_rank_bounds(orbitals(cyclic_group(3)), orbitals(cyclic_group(7)), 3, 1).ok
    K = orbitals(cyclic_group(7))
    assert (K.rank, K.pair_rank) == (7, 3) and K.rank == 2 * 3 + 1
    bad = check_rank_bounds(RankSummary(5, 2), RankSummary(2, 1), 1, 1)
    assert [ch.check_id for ch in bad.failures] == ["rankbound.H.upper", "pairtransitive.H"]


def test_orbital_pair_counts_construction():
    design = build_design((2, 13))
    H = orbitals(design.H_gens)
    K = orbitals(symmetric_group(7))
    rep = verify_orbital_pair_counts(design.block_codes, design.partition, H, K, 1, 2)
    assert rep.ok
    h_checks = [ch for ch in rep.checks if ch.check_id.startswith("orbitalcount.H")]
    assert [(ch.witness["u"], ch.witness["actual"]) for ch in h_checks] == [(6, 1), (6, 1)]
    (k_check,) = [ch for ch in rep.checks if ch.check_id.startswith("orbitalcount.K")]
    assert (k_check.witness["u"], k_check.witness["actual"]) == (6, 13)


def test_orbital_pair_counts_singer_all_lines():
    plane = build_plane(4)
    P = singer_partition(plane, 3, 7)
    H = orbitals(cyclic_group(3))
    K = orbitals(cyclic_group(7))
    assert H.pair_rank == 1 and H.sym_subdegree[H.labels[0]] == 2
    for line in plane.lines:
        assert verify_orbital_pair_counts(line, P, H, K, 3, 1).ok


def test_orbital_pair_counts_detect_wrong_block():
    design = build_design((2, 13))
    H = orbitals(design.H_gens)
    K = orbitals(symmetric_group(7))
    block = [0, 1, 13, 14, 26, 39]  # two pairs of the same orbital type
    rep = verify_orbital_pair_counts(block, design.partition, H, K, 1, 2)
    assert not rep.ok


@pytest.mark.parametrize("c, n", [(3, 1), (7, 3), (13, 6)])
def test_max_rank_conditions_regular_cyclic(c, n):
    rep = check_max_rank_conditions(cyclic_group(c), c, n)
    assert rep.ok
    assert rep["maxrank.odd_order"].witness["order"] == c
    assert rep["maxrank.subdegree"].witness["subdegrees"] == [1]


def test_max_rank_conditions_skip_over_cap():
    rep = check_max_rank_conditions(cyclic_group(7), 7, 3, cap=3)
    assert rep.ok and rep["maxrank.odd_order"].status == "skip"


def test_max_rank_conditions_fail_for_even_order():
    rep = check_max_rank_conditions(symmetric_group(3), 3, 1)
    assert not rep.ok


@pytest.mark.parametrize("v, k, lam, r, b", [
    (91, 6, 197730, 3_559_140, 53_980_290),
    (91, 6, 395460, 7_118_280, 107_960_580),
    (21, 5, 1, 5, 21),
    (7, 3, 1, 3, 7),
])
def test_design_params(v, k, lam, r, b):
    dp = design_params(v, k, lam)
    assert (dp.r, dp.b) == (r, b)
    assert dp.lam * (v - 1) == dp.r * (k - 1) and v * dp.r == dp.b * k


def test_design_params_rejects_impossible():
    with pytest.raises(DomainError):
        design_params(8, 3, 1)
