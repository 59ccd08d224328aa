import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ddwreath.errors import ContractError, DomainError, ResourceLimitError
from ddwreath.permgrp import (
    GeneratorSet,
    Perm,
    cyclic_group,
    enumerate_group,
    group_order_by_enumeration,
    induced_on_blocks,
    is_three_halves_transitive,
    orbitals,
    orbits,
    pair_rank,
    rank,
    restrict,
    symmetric_group,
)


def brute_orbitals(G):
    """Orbits on ordered distinct pairs by applying every group element."""
    elements = enumerate_group(G)
    deg = G.degree
    seen, result = set(), []
    for a, b in itertools.product(range(deg), repeat=2):
        if a == b or (a, b) in seen:
            continue
        orb = {(g[a], g[b]) for g in elements}
        seen |= orb
        result.append(frozenset(orb))
    return result


def affine_13():
    # x -> x + 1 and x -> 4x on Z_13 (4 = 2^2)
    return GeneratorSet.of(Perm(tuple((x + 1) % 13 for x in range(13))),
                           Perm(tuple(4 * x % 13 for x in range(13))))


def test_perm_basics():
    g = Perm.from_cycles(4, (0, 1, 2))
    h = Perm.from_cycles(4, (2, 3))
    assert (g * h)(1) == h(g(1)) == 3
    assert (g * g.inverse()).is_identity()
    with pytest.raises(DomainError):
        Perm((0, 0, 1))
    with pytest.raises(DomainError):
        GeneratorSet(3, ())
    with pytest.raises(DomainError):
        GeneratorSet(3, (Perm.identity(4),))


def test_orbit_examples():
    assert orbits(GeneratorSet.of(Perm.identity(5))) == [[0], [1], [2], [3], [4]]
    assert orbits(cyclic_group(5)) == [[0, 1, 2, 3, 4]]
    assert orbits(affine_13()) == [list(range(13))]
    two = GeneratorSet.of(Perm.from_cycles(5, (0, 2), (1, 3)))
    assert orbits(two) == [[0, 2], [1, 3], [4]]


def test_regular_z3_orbitals():
    dec = orbitals(cyclic_group(3))
    assert dec.labels == ((0, 1), (0, 2))
    assert dec.pairing == {(0, 1): (0, 2), (0, 2): (0, 1)}
    assert dec.subdegree == {(0, 1): 1, (0, 2): 1}
    assert dec.sym_subdegree == {(0, 1): 2, (0, 2): 2}
    assert {frozenset(dec.orbital_id(a, b) for a, b in orb) for orb in brute_orbitals(cyclic_group(3))} \
        == {frozenset({(0, 1)}), frozenset({(0, 2)})}


def test_symmetric_group_orbitals():
    dec = orbitals(symmetric_group(7))
    assert dec.labels == ((0, 1),)
    assert dec.is_self_paired((0, 1))
    assert dec.sym_subdegree[(0, 1)] == 6
    assert (dec.rank, dec.pair_rank) == (2, 1)


def test_affine_13_orbitals():
    dec = orbitals(affine_13())
    assert len(dec.labels) == 2
    assert all(dec.is_self_paired(lab) for lab in dec.labels)
    assert set(dec.subdegree.values()) == {6}
    squares = sorted(pow(4, j, 13) for j in range(6))
    assert squares == [1, 3, 4, 9, 10, 12]
    assert dec.suborbit(dec.orbital_id(0, 1), 0) == squares
    assert (rank(affine_13()), pair_rank(affine_13())) == (3, 2)


def test_rank_examples():
    assert (rank(symmetric_group(2)), pair_rank(symmetric_group(2))) == (2, 1)
    assert (rank(cyclic_group(7)), pair_rank(cyclic_group(7))) == (7, 3)
    assert (rank(GeneratorSet.of(Perm.identity(1))), pair_rank(GeneratorSet.of(Perm.identity(1)))) == (1, 0)


def test_intransitive_rejected():
    with pytest.raises(ContractError):
        orbitals(GeneratorSet.of(Perm.from_cycles(4, (0, 1))))


def test_three_halves_transitivity():
    assert is_three_halves_transitive(cyclic_group(7)) == (True, 1)
    assert is_three_halves_transitive(symmetric_group(4)) == (True, 3)
    assert is_three_halves_transitive(affine_13()) == (True, 6)
    # D_4 on the square has subdegrees 1 and 2
    d4 = GeneratorSet.of(Perm.from_cycles(4, (0, 1, 2, 3)), Perm.from_cycles(4, (1, 3)))
    assert is_three_halves_transitive(d4) == (False, None)


def test_group_order_by_enumeration():
    assert group_order_by_enumeration(cyclic_group(3)) == 3
    assert group_order_by_enumeration(affine_13()) == 78
    assert group_order_by_enumeration(symmetric_group(5)) == 120
    with pytest.raises(ResourceLimitError):
        group_order_by_enumeration(symmetric_group(6), cap=100)


def test_restrict_and_induced():
    g = Perm.from_cycles(6, (0, 2, 4), (1, 3, 5))
    assert restrict(g, [0, 2, 4]).images == (1, 2, 0)
    assert induced_on_blocks(g, [0, 1, 0, 1, 0, 1], 2).is_identity()
    with pytest.raises(ContractError):
        restrict(g, [0, 1])


@st.composite
def transitive_groups(draw):
    deg = draw(st.integers(min_value=2, max_value=7))
    gens = [draw(st.permutations(range(deg))) for _ in range(draw(st.integers(1, 3)))]
    # adding the cycle guarantees transitivity
    gens.append(list(range(1, deg)) + [0])
    return GeneratorSet(deg, tuple(Perm(tuple(g)) for g in gens))


@settings(max_examples=60, deadline=None)
@given(transitive_groups())
def test_orbitals_agree_with_brute_force(G):
    dec = orbitals(G)
    brute = brute_orbitals(G)
    assert len(dec.labels) == len(brute)
    for orb in brute:
        labels = {dec.orbital_id(a, b) for a, b in orb}
        assert len(labels) == 1
        lab = labels.pop()
        assert lab == min(orb)
        assert dec.sizes[dec.index(lab)] == len(orb)
    # invariants
    assert dec.pair_rank + 1 <= dec.rank <= 2 * dec.pair_rank + 1
    assert 1 + sum(dec.subdegree.values()) == G.degree
    for lab in dec.labels:
        assert dec.pairing[dec.pairing[lab]] == lab
        delta = 1 if dec.is_self_paired(lab) else 2
        assert dec.sym_subdegree[lab] == delta * dec.subdegree[lab]
