import random

from octad.factor import (Embedding, embed, factor, frobenius_orbit,
                          is_irreducible, one_root, roots_in_field,
                          squarefree_decomposition)
from octad.fields import PrimeField, extension_field
from octad.poly import UniPoly


def test_factor_recovers_known_product():
    k = PrimeField(5)
    a = UniPoly.from_ints(k, [1, 1])
    b = UniPoly.from_ints(k, [2, 0, 1])  # irreducible over GF(5)
    f = a * a * b
    # canonical order: lower degree first
    assert factor(f) == [(a, 2), (b, 1)]


def test_factor_product_reassembles():
    rng = random.Random(6)
    for p in (3, 7, 13):
        k = PrimeField(p)
        for _ in range(10):
            f = UniPoly(k, [k.from_int(rng.randrange(p)) for _ in range(7)]
                        + [k.one])
            out = UniPoly.one(k)
            for g, m in factor(f):
                assert g.is_monic()
                for _ in range(m):
                    out = out * g
            assert out == f.monic()


def test_factor_is_deterministic():
    k = PrimeField(11)
    f = UniPoly.from_ints(k, [3, 1, 4, 1, 5, 9, 2, 6, 1])
    assert factor(f, seed=1) == factor(f, seed=1)


def test_squarefree_handles_pth_powers():
    k = PrimeField(3)
    g = UniPoly.from_ints(k, [1, 1])
    f = g * g * g  # multiplicity 3 = p
    dec = squarefree_decomposition(f)
    assert dec == [(g, 3)]


def test_irreducibility():
    k = PrimeField(3)
    assert is_irreducible(UniPoly.from_ints(k, [1, 2, 0, 1]))
    assert not is_irreducible(UniPoly.from_ints(k, [1, 0, 1, 1]))


def test_roots_in_field():
    k = PrimeField(7)
    f = UniPoly.from_ints(k, [6, 0, 1]) * UniPoly.from_ints(k, [3, 0, 1])
    rts = roots_in_field(f)
    assert sorted(rts) == [1, 2, 5, 6]  # T^2-1 splits, T^2+3 does not


def test_one_root_lands_in_subfield_order():
    k = extension_field(3, 4)
    rng = random.Random(2)
    # irreducible quadratic over GF(9) inside GF(81)
    sub9 = [a for a in k.elements() if k.in_subfield(a, 2)]
    for g9 in _irreducible_quadratics(k, sub9):
        r = one_root(g9, 9, rng)
        assert k.is_zero(g9.evaluate(r))
        break


def _irreducible_quadratics(k, sub):
    for c0 in sub:
        for c1 in sub:
            g = UniPoly(k, [c0, c1, k.one])
            if all(not k.is_zero(g.evaluate(a)) for a in sub):
                yield g


def test_frobenius_orbit_size_divides_degree():
    k = extension_field(5, 6)
    orb = frobenius_orbit(k, k.gen, 1, 6)
    assert len(set(orb)) == 6
    assert k.frobenius(orb[-1]) == orb[0]


def test_embedding_section_roundtrip():
    small = extension_field(3, 2)
    big = extension_field(3, 6)
    e = embed(small, big)
    for a in small.elements():
        assert e.section(e.apply(a)) == a


def test_embedding_is_a_homomorphism():
    small = extension_field(5, 2)
    big = extension_field(5, 4)
    e = embed(small, big)
    elems = list(small.elements())
    rng = random.Random(9)
    for _ in range(25):
        a, b = rng.choice(elems), rng.choice(elems)
        assert e.apply(small.mul(a, b)) == big.mul(e.apply(a), e.apply(b))
        assert e.apply(small.add(a, b)) == big.add(e.apply(a), e.apply(b))
