import random
from collections import Counter

import pytest

from conftest import certified_instance
from octad.bitangents import (all_bitangents, bitangent_of_pair, is_bitangent,
                              line_orbits, map_quartic, orbit_report,
                              splitting_data, square_split)
from octad.fields import PrimeField, extension_field
from octad.octad import OctadSpec, build_net, det_quartic
from octad.poly import UniPoly


def test_splitting_data_root_properties():
    spec, _, _ = certified_instance(11, seed=1)
    pts = splitting_data(spec)
    assert len(set(pts.roots)) == 8
    acc = pts.ctx.zero
    for r in pts.roots:
        acc = pts.ctx.add(acc, r)
    assert pts.ctx.is_zero(acc)  # trace-zero survives the splitting field
    fk = spec.f.map_coeffs(pts.ctx, pts.embedding.apply)
    assert all(pts.ctx.is_zero(fk.evaluate(r)) for r in pts.roots)


def test_irreducible_octic_gives_eight_cycle():
    k = PrimeField(5)
    # T^8 + 4*T^2 + T + 3 is irreducible over GF(5)
    f = UniPoly.from_ints(k, [3, 1, 4, 0, 0, 0, 0, 0, 1])
    spec = OctadSpec(f)
    pts = splitting_data(spec)
    assert sorted(pts.factor_degrees) == [8]
    assert pts.frobenius_perm.cycle_type() == [8]


def test_frobenius_permutes_roots():
    spec, _, _ = certified_instance(13, seed=3)
    pts = splitting_data(spec)
    pi = pts.frobenius_perm
    e0 = pts.base.degree
    for i, r in enumerate(pts.roots):
        img = pts.ctx.frobenius_iter(r, e0) \
            if hasattr(pts.ctx, "frobenius_iter") else r
        assert img == pts.roots[pi.img[i]]


def test_square_split_recognizes_squares():
    k = PrimeField(7)
    # (s^2 + 3 s t + 5 t^2)^2 scaled by 2
    beta, gamma = k.from_int(3), k.from_int(5)
    h = [k.one, beta, gamma]
    sq = [k.zero] * 5
    for i, a in enumerate(h):
        for j, b in enumerate(h):
            sq[i + j] = k.add(sq[i + j], k.mul(a, b))
    g = [k.mul(k.from_int(2), c) for c in sq]
    out = square_split(g, k)
    assert out is not None
    c, hh = out
    assert c == k.from_int(2)
    assert hh == (k.one, beta, gamma)


def test_square_split_rejects_non_square():
    k = PrimeField(7)
    g = [k.one, k.one, k.zero, k.zero, k.one]  # squarefree of degree 4
    assert square_split(g, k) is None


def test_twenty_eight_distinct_lines():
    spec, net, _ = certified_instance(11, seed=21)
    pts = splitting_data(spec)
    lines = all_bitangents(net, pts)
    assert len(lines) == 28
    assert len({l.coeffs for l in lines}) == 28


def test_lines_are_actual_bitangents():
    spec, net, quartic = certified_instance(5, seed=2)
    pts = splitting_data(spec)
    qk = map_quartic(quartic, pts.embedding)
    for line in all_bitangents(net, pts):
        assert is_bitangent(qk, line)


def test_random_line_is_not_a_bitangent():
    from octad.bitangents import BitangentLine
    spec, net, quartic = certified_instance(5, seed=2)
    pts = splitting_data(spec)
    qk = map_quartic(quartic, pts.embedding)
    k = pts.ctx
    lines = {l.coeffs for l in all_bitangents(net, pts)}
    rng = random.Random(0)

    def rand_elem():
        # the splitting field is far too large to enumerate
        acc, power = k.zero, k.one
        for _ in range(k.degree):
            c = k.from_int(rng.randrange(5))
            acc = k.add(acc, k.mul(c, power))
            power = k.mul(power, k.gen)
        return acc

    hits = 0
    for _ in range(40):
        coeffs = (k.one, rand_elem(), rand_elem())
        if coeffs in lines:
            continue
        fake = BitangentLine((0, 1), k, coeffs, 1)
        hits += bool(is_bitangent(qk, fake))
    assert hits == 0


def test_orbit_report_matches_two_set_action():
    for p, seed in ((3, 4), (5, 9), (11, 14), (13, 101)):
        spec, net, quartic = certified_instance(p, seed=seed)
        rep = orbit_report(spec, net, quartic)
        assert rep.match
        assert rep.equivariant
        assert rep.all_squares
        assert sum(rep.bitangent_orbit_sizes) == 28
        assert Counter(rep.bitangent_orbit_sizes) == \
            Counter(rep.two_set_orbit_sizes)


def test_irreducible_case_orbit_multiset():
    k = PrimeField(5)
    f = UniPoly.from_ints(k, [3, 1, 4, 0, 0, 0, 0, 0, 1])
    spec = OctadSpec(f)
    net = build_net(spec)
    rep = orbit_report(spec, net, det_quartic(net))
    assert sorted(rep.two_set_orbit_sizes) == [4, 8, 8, 8]
    assert rep.match


def test_line_orbits_partition():
    spec, net, _ = certified_instance(7, seed=30)
    pts = splitting_data(spec)
    lines = all_bitangents(net, pts)
    orbits = line_orbits(lines, pts.ctx, pts.base.degree)
    assert sum(len(o) for o in orbits) == 28
    for orbit in orbits:
        assert len({l.definition_degree for l in orbit}) == 1
        assert orbit[0].definition_degree == len(orbit)
