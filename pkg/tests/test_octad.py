import itertools
import random

import pytest

from conftest import certified_instance, random_certified_spec
from octad.fields import PrimeField, RationalField, extension_field
from octad.linalg import Matrix, rank
from octad.octad import (MONOMIALS, OctadSpec, TernaryPoly, TernaryQuartic,
                         build_net, certify_octad, det_quartic,
                         net_kernel_oracle, normalize_trace,
                         smooth_bruteforce)
from octad.poly import UniPoly

QQ = RationalField()

F1 = UniPoly.from_ints(QQ, [1197, 1152, 168, 0, 42, 0, 0, 0, 1])


def test_m3_closed_form_rows():
    net = build_net(OctadSpec(F1))
    m3 = net.m3.matrix
    expect = [[1197, 576, 84, 21],
              [576, 0, 0, 0],
              [84, 0, 0, 0],
              [21, 0, 0, 1]]
    for i in range(4):
        for j in range(4):
            assert m3.rows[i][j] == QQ.from_int(expect[i][j])


def test_certificate_passes_for_first_example():
    cert = certify_octad(OctadSpec(F1))
    assert cert.separable and cert.passes


def test_certificate_fails_on_zero_subset_sum():
    f = UniPoly.from_ints(QQ, [-1, 0, 0, 0, 0, 0, 0, 0, 1])  # T^8 - 1
    cert = certify_octad(OctadSpec(f))
    assert cert.separable
    assert QQ.is_zero(cert.subset_sum_det)
    assert not cert.passes


def test_certificate_fails_on_inseparable_input():
    f = UniPoly.from_ints(QQ, [0, 0, 0, 0, 1, 0, 0, 0, 1])  # T^8 + T^4
    cert = certify_octad(OctadSpec(f))
    assert not cert.separable and not cert.passes


def test_certificate_against_mpmath_root_oracle():
    # numerically: no 4 of the 8 complex roots of F1 sum to zero
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 40
    roots = mp.polyroots([1, 0, 0, 0, 42, 0, 168, 1152, 1197],
                         maxsteps=200, extraprec=100)
    smallest = min(
        abs(sum(c)) for c in itertools.combinations(roots, 4))
    assert smallest > 1e-6


def test_net_contains_rational_normal_curve_relations():
    net = build_net(OctadSpec(F1))
    q1 = net.m1.restrict_to_curve()
    q2 = net.m2.restrict_to_curve()
    assert q1.is_zero() and q2.is_zero()
    assert net.m3.restrict_to_curve() == F1


def test_net_matches_kernel_oracle():
    rng = random.Random(5)
    for p in (5, 11):
        spec = random_certified_spec(p, rng)
        net = build_net(spec)
        oracle = net_kernel_oracle(spec)
        assert len(oracle) == 3
        # each closed-form matrix lies in the oracle's span and vice versa
        _assert_same_span(spec.ctx, net, oracle)


def _flatten(m):
    return [m.rows[i][j] for i in range(4) for j in range(i, 4)]


def _assert_same_span(ctx, net, oracle):
    ours = [_flatten(q.matrix) for q in net.quadrics()]
    theirs = [_flatten(m.matrix) for m in oracle]
    stacked = Matrix(ctx, ours + theirs)
    assert rank(Matrix(ctx, ours)) == 3
    assert rank(Matrix(ctx, theirs)) == 3
    assert rank(stacked) == 3


def test_net_members_have_rank_at_least_three():
    spec, net, _ = certified_instance(7, seed=40)
    k = spec.ctx
    rng = random.Random(1)
    for _ in range(20):
        u = tuple(k.from_int(rng.randrange(7)) for _ in range(3))
        if all(k.is_zero(c) for c in u):
            continue
        assert rank(net.member(u)) >= 3


def test_quartic_transforms_covariantly_with_net_basis():
    # replacing q3 by q3 + a q1 + b q2 substitutes u1 -> u1 + a u3,
    # u2 -> u2 + b u3 in the quartic
    from octad.octad import NetOfQuadrics, SymmetricQuadric
    spec, net, quartic = certified_instance(11, seed=77)
    k = spec.ctx
    a, b = k.from_int(3), k.from_int(8)
    m3 = net.member((a, b, k.one))
    net2 = NetOfQuadrics(net.m1, net.m2, SymmetricQuadric(m3))
    q2 = det_quartic(net2).to_poly()
    u1 = TernaryPoly.variable(k, 0)
    u2 = TernaryPoly.variable(k, 1)
    u3 = TernaryPoly.variable(k, 2)
    subbed = quartic.to_poly().substitute(
        [u1 + u3.scale(a), u2 + u3.scale(b), u3])
    assert q2 == subbed


def test_normalize_trace_shift_and_idempotence():
    f = UniPoly.from_ints(QQ, [0, 0, 0, 0, 0, 0, 0, 8, 1])  # T^8 + 8 T^7
    spec = normalize_trace(f)
    assert spec.normalized
    # f(T - 1) has no degree-7 term
    assert spec.f == f.shift(QQ.from_int(-1))
    again = normalize_trace(spec.f)
    assert again.f == spec.f


def test_smooth_bruteforce_fermat_quartic():
    k = PrimeField(5)
    coeffs = [k.zero] * 15
    for mono in ((4, 0, 0), (0, 4, 0), (0, 0, 4)):
        coeffs[MONOMIALS.index(mono)] = k.one
    assert smooth_bruteforce(TernaryQuartic(k, coeffs))


def test_smooth_bruteforce_detects_singular():
    k = PrimeField(5)
    coeffs = [k.zero] * 15
    coeffs[MONOMIALS.index((2, 2, 0))] = k.one  # u1^2 u2^2
    assert not smooth_bruteforce(TernaryQuartic(k, coeffs))


def test_certified_quartic_is_smooth():
    _, _, quartic = certified_instance(11, seed=13)
    assert smooth_bruteforce(quartic)


def test_octad_spec_rejects_wrong_degree():
    with pytest.raises(ValueError):
        OctadSpec(UniPoly.from_ints(QQ, [1, 0, 1]))
