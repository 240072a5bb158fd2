from __future__ import annotations

import math

import pytest

from twofold.perm import Permutation, PermGroup, ResourceError, closure, compose, inverse, order, small_generating_set


def test_compose_with_inverse():
    p = Permutation([2, 0, 3, 1])
    assert compose(p, inverse(p)).is_identity()


def test_composition_applies_right_first():
    p = Permutation([1, 2, 0])
    q = Permutation([0, 2, 1])
    assert tuple(p * q) == tuple(p[q[i]] for i in range(3))


def test_orders():
    assert order(Permutation.from_cycles(5, [(0, 1, 2)])) == 3
    assert order(Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])) == 6
    assert order(Permutation.identity(4)) == 1


def test_power_and_negative_power():
    p = Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])
    assert p ** 5 == Permutation.identity(5)
    assert p ** -1 == p.inverse()


def test_not_a_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation([0, 1]), Permutation([0, 1, 2]))


def test_cycle_notation():
    assert Permutation.from_cycles(4, [(0, 2)]).cycle_notation() == "(0 2)"
    assert Permutation.identity(3).cycle_notation() == "()"


def test_closure_cyclic():
    assert closure([Permutation.from_cycles(6, [tuple(range(6))])]).order() == 6


def test_closure_empty():
    assert closure([], degree=4).order() == 1


def test_closure_s5():
    g = closure([Permutation.from_cycles(5, [(0, 1)]), Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])])
    assert g.order() == math.factorial(5)


def test_closure_cap():
    with pytest.raises(ResourceError, match="cap"):
        closure([Permutation.from_cycles(6, [(0, 1)]), Permutation.from_cycles(6, [tuple(range(6))])], cap=100)


def test_group_orbits_and_membership():
    g = closure([Permutation.from_cycles(5, [(0, 1)]), Permutation.from_cycles(5, [(2, 3)])])
    assert sorted(map(sorted, g.orbits())) == [[0, 1], [2, 3], [4]]
    assert Permutation.from_cycles(5, [(0, 1), (2, 3)]) in g
    assert g.is_abelian()


def test_small_generating_set():
    g = closure([Permutation.from_cycles(4, [(0, 1)]), Permutation.from_cycles(4, [(0, 1, 2, 3)])])
    gens = small_generating_set(g.elements, 4)
    assert closure(gens, degree=4).order() == 24


def test_from_elements_order():
    els = [Permutation.identity(3), Permutation([1, 0, 2])]
    assert PermGroup.from_elements(3, els).order() == 2
