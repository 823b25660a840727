import random
from collections import Counter

import pytest

from octad.perms import (CosetAction, PermGroup, Permutation,
                         canonical_coset_rep, conjugate_in, coset_action,
                         matrix_preserves_form, pair_of_index, s8_image_group,
                         s8_to_sp6, sp6_apply, sp6_group, sp6_mul,
                         symplectic_form, transvection, two_set_action,
                         twofold_stabilizer)

S8_GENS = [Permutation.from_cycles(8, [(0, 1)]),
           Permutation(tuple((i + 1) % 8 for i in range(8)))]


def test_permutation_algebra():
    a, b = S8_GENS
    assert (a * b) * b.inverse() == a
    assert a.inverse() == a
    assert b.cycle_type() == [8]


def test_schreier_sims_s8_order():
    g = PermGroup(8, S8_GENS)
    assert g.order == 40320
    assert g.is_transitive()


def test_stabilizer_chain():
    g = PermGroup(8, S8_GENS)
    s = g.stabilizer(0)
    assert s.order == 5040
    assert 0 not in s.orbit(1)
    assert all(x.img[0] == 0 for x in s.generators)


def test_membership():
    g = PermGroup(8, S8_GENS)
    rng = random.Random(2)
    for _ in range(20):
        assert g.contains(g.random_element(rng))
    a4_gens = [Permutation.from_cycles(4, [(0, 1), (2, 3)]),
               Permutation.from_cycles(4, [(0, 1, 2)])]
    h = PermGroup(8, [Permutation(p.img + (4, 5, 6, 7)) for p in a4_gens])
    assert h.order == 12
    assert not h.contains(Permutation.from_cycles(8, [(0, 1)]))


def test_two_set_action_cycle_types():
    transposition = two_set_action(S8_GENS[0])
    assert Counter(transposition.cycle_type()) == Counter([1] * 16 + [2] * 6)
    eight_cycle = two_set_action(S8_GENS[1])
    assert sorted(eight_cycle.cycle_type()) == [4, 8, 8, 8]


def test_pair_indexing_roundtrip():
    seen = {pair_of_index(k) for k in range(28)}
    assert len(seen) == 28


def test_s8_to_sp6_preserves_form():
    rng = random.Random(5)
    g = PermGroup(8, S8_GENS)
    for _ in range(10):
        m = s8_to_sp6(g.random_element(rng))
        assert matrix_preserves_form(m)


def test_s8_to_sp6_is_a_homomorphism():
    rng = random.Random(6)
    g = PermGroup(8, S8_GENS)
    for _ in range(10):
        a, b = g.random_element(rng), g.random_element(rng)
        assert s8_to_sp6(a * b) == sp6_mul(s8_to_sp6(a), s8_to_sp6(b))


def test_transvections_preserve_form():
    # transvections act on nonzero vectors; point v-1 carries vector v
    for v in (1, 2, 37, 63):
        t = transvection(v)
        vec = lambda x: t.img[x - 1] + 1
        assert (t * t).is_identity()
        for x in (1, 5, 44):
            for y in (2, 9, 63):
                assert symplectic_form(vec(x), vec(y)) == \
                    symplectic_form(x, y)


def test_sp6_order_and_transitivity():
    g = sp6_group()
    assert g.order == 1451520
    assert g.is_transitive()


def test_s8_image_and_index():
    u36 = s8_image_group()
    assert u36.order == 40320
    assert sp6_group().order // u36.order == 36


def test_coset_action_doubly_transitive():
    act = coset_action(sp6_group(), s8_image_group())
    g = act.group
    assert g.degree == 36
    assert g.is_transitive()
    assert len(g.stabilizer(0).orbit(1)) == 35


def test_twofold_stabilizer_order():
    act = coset_action(sp6_group(), s8_image_group())
    assert twofold_stabilizer(act.group, 0, 1).order == 1152


def test_conjugate_in_transposition():
    u36 = s8_image_group()
    sp6 = sp6_group()
    rng = random.Random(3)
    u = u36.random_element(rng)
    while u.is_identity():
        u = u36.random_element(rng)
    g = sp6.random_element(rng)
    while not u36.contains(g * u * g.inverse()):
        g = sp6.random_element(rng)
    moved = [g * u * g.inverse()]
    h = conjugate_in([u], moved, u36)
    assert h is not None
    hi = h.inverse()
    target = PermGroup(63, moved)
    assert target.contains(h * u * hi)


def test_canonical_coset_rep_constant_on_cosets():
    g = PermGroup(8, S8_GENS)
    h = g.stabilizer(0)
    rng = random.Random(9)
    x = g.random_element(rng)
    for _ in range(5):
        s = h.random_element(rng)
        assert canonical_coset_rep(x * s, h) == canonical_coset_rep(x, h)
