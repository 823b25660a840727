import random

import pytest

from octad.fields import PrimeField, RationalField, extension_field
from octad.poly import UniPoly, interpolate, is_separable, resultant

QQ = RationalField()


def _rand_poly(ctx, deg, rng):
    coeffs = [ctx.from_int(rng.randrange(97)) for _ in range(deg)]
    return UniPoly(ctx, coeffs + [ctx.one])


def test_divmod_roundtrip():
    rng = random.Random(11)
    k = PrimeField(13)
    for _ in range(40):
        f = _rand_poly(k, rng.randrange(2, 9), rng)
        g = _rand_poly(k, rng.randrange(1, 5), rng)
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.is_zero() or r.degree < g.degree


def test_gcd_of_common_factor():
    k = PrimeField(7)
    h = UniPoly.from_ints(k, [3, 1])  # T + 3
    f = h * UniPoly.from_ints(k, [1, 2, 1])
    g = h * UniPoly.from_ints(k, [5, 1, 1])
    assert f.gcd(g) % h == UniPoly.zero(k)
    assert f.gcd(g).degree == 1


def test_shift_then_unshift():
    f = UniPoly.from_ints(QQ, [3, -1, 0, 2, 1])
    a = QQ.from_int(5)
    assert f.shift(a).shift(QQ.neg(a)) == f


def test_compose_evaluates_pointwise():
    k = PrimeField(31)
    rng = random.Random(3)
    f = _rand_poly(k, 4, rng)
    g = _rand_poly(k, 3, rng)
    h = f.compose(g)
    for x in range(10):
        assert h.evaluate(k.from_int(x)) == f.evaluate(
            g.evaluate(k.from_int(x)))


def test_interpolate_recovers_polynomial():
    rng = random.Random(23)
    for ctx in (PrimeField(101), extension_field(3, 4)):
        elems = list(ctx.elements())[:12]
        f = UniPoly(ctx, [rng.choice(elems) for _ in range(10)] + [ctx.one])
        pts = [(x, f.evaluate(x)) for x in elems]
        assert interpolate(ctx, pts) == f


def test_interpolate_rejects_repeated_nodes():
    k = PrimeField(5)
    with pytest.raises(ZeroDivisionError):
        interpolate(k, [(k.one, k.one), (k.one, k.zero)])


def test_separability():
    k = PrimeField(5)
    assert is_separable(UniPoly.from_ints(k, [1, 0, 0, 0, 0, 0, 0, 0, 1]))
    # (T+1)^2 * anything is not
    sq = UniPoly.from_ints(k, [1, 2, 1])
    assert not is_separable(sq * UniPoly.from_ints(k, [3, 1]))


def test_resultant_vanishes_iff_common_root():
    k = PrimeField(13)
    f = UniPoly.from_ints(k, [12, 1])          # T - 1
    g = UniPoly.from_ints(k, [12, 0, 1])       # T^2 - 1
    h = UniPoly.from_ints(k, [2, 0, 1])
    assert k.is_zero(resultant(f, g))
    assert not k.is_zero(resultant(f, h))


def test_pow_mod():
    k = PrimeField(7)
    m = UniPoly.from_ints(k, [3, 0, 1])
    x = UniPoly.x(k)
    assert x.pow_mod(49, m) == x.pow_mod(7, m).compose(x.pow_mod(7, m)) % m
