import random

from octad.fields import PrimeField
from octad.octad import OctadSpec, build_net, certify_octad, det_quartic
from octad.poly import UniPoly, is_separable


def random_octic(ctx, rng):
    """A random monic trace-zero degree-8 polynomial."""
    coeffs = [ctx.from_int(rng.randrange(ctx.characteristic))
              for _ in range(7)]
    return UniPoly(ctx, coeffs + [ctx.zero, ctx.one])


def random_certified_spec(p, rng, max_tries=500):
    """Keep sampling until the subset-sum certificate passes."""
    ctx = PrimeField(p)
    for _ in range(max_tries):
        f = random_octic(ctx, rng)
        if not is_separable(f):
            continue
        spec = OctadSpec(f)
        if certify_octad(spec).passes:
            return spec
    raise AssertionError(f"no certified octic found over GF({p})")


def certified_instance(p, seed):
    rng = random.Random(seed)
    spec = random_certified_spec(p, rng)
    net = build_net(spec)
    return spec, net, det_quartic(net)
