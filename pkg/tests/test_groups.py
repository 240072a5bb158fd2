from __future__ import annotations

import json

import pytest

from twofold.groups import (
    FiniteGroup,
    GroupAutomorphism,
    GroupError,
    SemidirectZ2,
    builtin_group,
    builtin_groups_up_to,
    conjugacy_classes,
    count_tf_classes,
    cyclic,
    dihedral,
    direct_product,
    dump_group_json,
    elementary_abelian_2,
    find_sigma_invariant_sylow2,
    identity_automorphism,
    inversion_automorphism,
    involutory_automorphisms_sample,
    load_group_json,
    parity_holds,
    parse_sigma,
    rank,
    reduce_to_2power_rep,
    s_set,
    symmetric,
    sylow2_invariant_bound_check,
    tf_classes,
    two_part,
)


def transposition(h: FiniteGroup) -> int:
    return next(a for a in h.elements() if h.element_order(a) == 2)


class TestFiniteGroup:
    def test_builtin_orders(self):
        assert builtin_group("Z:6").order == 6
        assert builtin_group("Z2^:3").order == 8
        assert builtin_group("D:4").order == 8
        assert builtin_group("S:4").order == 24
        assert builtin_group("prod:Z:3,Z:3").order == 9
        assert builtin_group("trivial").order == 1

    def test_unknown_name(self):
        with pytest.raises(GroupError):
            builtin_group("Q:8")

    def test_bad_table_rejected(self):
        with pytest.raises(GroupError):
            FiniteGroup([[0, 1], [0, 1]], 0)

    def test_nonassociative_rejected(self):
        # a loop of order 5 that is not a group
        t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
        with pytest.raises(GroupError):
            FiniteGroup(t, 0)

    def test_laws(self):
        h = symmetric(3)
        for a in h.elements():
            assert h.mul(a, h.identity) == a == h.mul(h.identity, a)
            assert h.mul(a, h.inv(a)) == h.identity

    def test_json_roundtrip(self):
        h = dihedral(4)
        s = parse_sigma(h, "id")
        h2, s2 = load_group_json(dump_group_json(h, s))
        assert h2.order == 8 and s2.map == s.map

    def test_json_sigma_checked(self):
        bad = json.dumps({"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "identity": 0, "sigma": [0, 2, 2]})
        with pytest.raises(GroupError):
            load_group_json(bad)

    def test_direct_product_abelian(self):
        assert direct_product(cyclic(2), cyclic(3)).is_abelian()


class TestAutomorphisms:
    def test_inversion_requires_abelian(self):
        with pytest.raises(GroupError):
            inversion_automorphism(symmetric(3))

    def test_non_involutory_rejected(self):
        h = cyclic(5)
        with pytest.raises(GroupError, match="involutory"):
            GroupAutomorphism(h, tuple((2 * a) % 5 for a in range(5)))

    def test_non_homomorphism_rejected(self):
        with pytest.raises(GroupError):
            GroupAutomorphism(cyclic(4), (0, 1, 3, 2))

    def test_conjugation_by_transposition(self):
        h = symmetric(3)
        s = parse_sigma(h, f"conj:{transposition(h)}")
        assert len(s.fixed()) == 2


class TestRank:
    def test_cyclic(self):
        assert rank(cyclic(6))[0] == 1

    def test_klein(self):
        k, w = rank(elementary_abelian_2(2))
        assert k == 2 and len(w) == 2

    def test_s3(self):
        k, w = rank(symmetric(3))
        assert k == 2 and symmetric(3).generated(w) == frozenset(range(6))

    def test_trivial(self):
        assert rank(builtin_group("trivial"))[0] == 0

    def test_witness_lexicographic(self):
        assert rank(cyclic(6))[1] == (1,)


class TestConjugacy:
    def test_abelian_singletons(self):
        assert all(len(c) == 1 for c in conjugacy_classes(cyclic(5)))

    def test_s3_sizes(self):
        assert sorted(len(c) for c in conjugacy_classes(symmetric(3))) == [1, 2, 3]

    def test_semidirect_klein_id(self):
        h = elementary_abelian_2(2)
        sd = SemidirectZ2(h, identity_automorphism(h))
        cls = conjugacy_classes(sd)
        assert len(cls) == 8 and all(len(c) == 1 for c in cls)


class TestSemidirect:
    @pytest.mark.parametrize("name,sigma", [("Z:5", "inv"), ("S:3", "id"), ("D:4", "id")])
    def test_laws(self, name, sigma):
        h = builtin_group(name)
        sd = SemidirectZ2(h, parse_sigma(h, sigma))
        assert len(sd.elements()) == 2 * h.order
        assert sd.mul(sd.x, sd.x) == sd.identity
        for a in h.elements():
            g = sd.index(a, 0)
            conj = sd.mul(sd.mul(sd.x, g), sd.inv(sd.x))
            assert sd.pair(conj) == (sd.sigma(a), 0)
        sd.as_finite_group()  # associativity check on the full table


class TestSSet:
    def test_z3_inversion(self):
        h = cyclic(3)
        sd = SemidirectZ2(h, inversion_automorphism(h))
        assert sorted(sd.pair(g) for g in s_set(h, inversion_automorphism(h))) == [(0, 1), (1, 1), (2, 1)]

    def test_z3_identity(self):
        h = cyclic(3)
        sd = SemidirectZ2(h, identity_automorphism(h))
        assert [sd.pair(g) for g in s_set(h, identity_automorphism(h))] == [(0, 1)]

    def test_z2k_identity_everything(self):
        h = elementary_abelian_2(3)
        assert len(s_set(h, identity_automorphism(h))) == 8

    def test_members_square_to_identity(self):
        h = dihedral(5)
        for s in involutory_automorphisms_sample(h):
            sd = SemidirectZ2(h, s)
            assert sd.x in s_set(h, s)
            assert all(sd.mul(g, g) == sd.identity for g in s_set(h, s))


class TestCounts:
    def test_z2k_identity(self):
        for k in (1, 2, 3):
            h = elementary_abelian_2(k)
            assert count_tf_classes(h, identity_automorphism(h)) == 2**k

    def test_z3(self):
        h = cyclic(3)
        assert count_tf_classes(h, inversion_automorphism(h)) == 1
        assert count_tf_classes(h, identity_automorphism(h)) == 1

    def test_classes_partition_s_set(self):
        h = symmetric(3)
        s = identity_automorphism(h)
        cls = tf_classes(h, s)
        assert sorted(x for c in cls for x in c) == sorted(s_set(h, s))

    def test_two_part(self):
        assert two_part(48) == 16 and two_part(9) == 1


class TestSylow:
    def test_s3(self):
        h = symmetric(3)
        rep = sylow2_invariant_bound_check(h, identity_automorphism(h))
        assert rep.p2_order == 2 and rep.bound_2k == 2 and rep.holds

    def test_z4(self):
        h = cyclic(4)
        rep = sylow2_invariant_bound_check(h, identity_automorphism(h))
        assert rep.p2_order == 4 and rep.bound_2k == 4 and rep.holds

    def test_z3_inversion(self):
        h = cyclic(3)
        rep = sylow2_invariant_bound_check(h, inversion_automorphism(h))
        assert rep.p2_order == 1 and rep.count_h <= 1

    def test_invariance(self):
        h = symmetric(4)
        for s in involutory_automorphisms_sample(h):
            p2 = find_sigma_invariant_sylow2(h, s)
            assert len(p2) == 8 and {s(a) for a in p2} == set(p2)


class TestReduce:
    def test_order_six(self):
        h = cyclic(6)
        sd = SemidirectZ2(h, inversion_automorphism(h))
        out = reduce_to_2power_rep(sd, sd.index(1, 1))
        assert sd.pair(out) == (3, 1)
        assert any(sd.index(1, 1) in c and out in c for c in conjugacy_classes(sd))

    def test_identity_unchanged(self):
        h = cyclic(6)
        sd = SemidirectZ2(h, inversion_automorphism(h))
        assert reduce_to_2power_rep(sd, sd.x) == sd.x

    def test_order_four_unchanged(self):
        h = cyclic(4)
        sd = SemidirectZ2(h, inversion_automorphism(h))
        assert reduce_to_2power_rep(sd, sd.index(1, 1)) == sd.index(1, 1)


def test_parity_all_builtins():
    for h in builtin_groups_up_to(24):
        for s in involutory_automorphisms_sample(h):
            assert parity_holds(h, s)
