import pytest

from conftest import certified_instance
from octad.bitangents import orbit_report
from octad.fields import FieldError, PrimeField
from octad.twist import (TwistedSurface, exceptional_structure,
                         twist_invariance_check)


def _nonsquare(k):
    return next(a for a in k.nonzero_elements() if not k.is_square(a))


def test_branch_and_block_sums():
    for p, seed in ((5, 3), (7, 12), (11, 6)):
        spec, net, quartic = certified_instance(p, seed=seed)
        k = spec.ctx
        for lam in (k.one, _nonsquare(k)):
            rep = exceptional_structure(
                TwistedSurface(spec, net, quartic, lam))
            assert sum(rep.branch_orbit_sizes) == 56
            assert sum(rep.block_orbit_sizes) == 28


def test_blocks_cover_bitangent_orbits():
    spec, net, quartic = certified_instance(5, seed=17)
    k = spec.ctx
    bit = sorted(orbit_report(spec, net, quartic).bitangent_orbit_sizes)
    for lam in (k.one, _nonsquare(k)):
        rep = exceptional_structure(TwistedSurface(spec, net, quartic, lam))
        assert rep.block_orbit_sizes == bit


def test_each_block_carries_two_branches():
    spec, net, quartic = certified_instance(7, seed=5)
    rep = exceptional_structure(
        TwistedSurface(spec, net, quartic, spec.ctx.one))
    assert len(rep.pairs) == 28
    for pair in rep.pairs:
        assert sum(pair.branch_orbit_sizes) == 2 * pair.line.definition_degree


def test_reports_equal_within_square_class():
    spec, net, quartic = certified_instance(11, seed=2)
    k = spec.ctx
    mu = k.from_int(3)
    lam = _nonsquare(k)
    a = exceptional_structure(TwistedSurface(spec, net, quartic, lam))
    b = exceptional_structure(
        TwistedSurface(spec, net, quartic, k.mul(lam, k.mul(mu, mu))))
    assert a == b


def test_projection_is_lambda_independent():
    spec, net, quartic = certified_instance(13, seed=9)
    k = spec.ctx
    lams = [k.one, k.from_int(2), _nonsquare(k)]
    assert twist_invariance_check(spec, net, quartic, lams)


def test_zero_lambda_rejected():
    spec, net, quartic = certified_instance(5, seed=3)
    with pytest.raises(FieldError):
        TwistedSurface(spec, net, quartic, spec.ctx.zero)


def test_uncertified_quartic_rejected():
    from octad.octad import OctadSpec, build_net, det_quartic
    from octad.poly import UniPoly
    k = PrimeField(5)
    f = UniPoly.from_ints(k, [4, 0, 0, 0, 0, 0, 0, 0, 1])  # T^8 - 1
    spec = OctadSpec(f)
    net = build_net(spec)
    with pytest.raises(FieldError):
        TwistedSurface(spec, net, det_quartic(net), k.one)
