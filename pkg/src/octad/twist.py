"""Frobenius structure of the 56 exceptional curves of the double cover
lambda * w^2 = q over a finite field.

Each bitangent carries exactly two exceptional curves (the two branches
w = +/- sqrt(c/lambda) * h over the line, where the quartic restricts to
c * h^2).  A bitangent with definition degree e keeps both branches
rational over F_{q0^e} exactly when c/lambda is a square there, in which
case its Frobenius orbit of size e splits into two orbits of size e;
otherwise the two branches fuse into a single orbit of size 2e.  The
scalar c is well defined up to squares of F_{q0^e}, so the criterion
depends only on the square class of c * lambda.
"""

from __future__ import annotations

from octad.factor import DEFAULT_SEED, embed
from octad.fields import FieldError, PrimeField, extension_field
from octad.bitangents import (
    _restrict_to_line,
    all_bitangents,
    line_orbits,
    map_quartic,
    splitting_data,
    square_split,
)
from octad.octad import TernaryQuartic, certify_octad


class TwistedSurface:
    """The double cover lambda * w^2 = q of the plane, branched along a
    certified nonsingular quartic."""

    __slots__ = ("spec", "net", "quartic", "lam")

    def __init__(self, spec, net, quartic, lam):
        if spec.ctx.is_zero(lam):
            raise FieldError("twist parameter lambda must be nonzero")
        if not certify_octad(spec).passes:
            raise FieldError("twisted surface requires a certified quartic")
        self.spec = spec
        self.net = net
        self.quartic = quartic
        self.lam = lam


class ExceptionalCurvePair:
    """The two exceptional curves over one bitangent."""

    __slots__ = ("line", "scalar", "contact", "splits", "branch_orbit_sizes")

    def __init__(self, line, scalar, contact, splits):
        self.line = line
        self.scalar = scalar
        self.contact = contact
        self.splits = splits
        e = line.definition_degree
        self.branch_orbit_sizes = (e, e) if splits else (2 * e,)


class TwistReport:
    __slots__ = ("branch_orbit_sizes", "block_orbit_sizes", "lambda_is_square",
                 "pairs")

    def __init__(self, branch_orbit_sizes, block_orbit_sizes,
                 lambda_is_square, pairs):
        self.branch_orbit_sizes = branch_orbit_sizes
        self.block_orbit_sizes = block_orbit_sizes
        self.lambda_is_square = lambda_is_square
        self.pairs = pairs

    def __eq__(self, other):
        return isinstance(other, TwistReport) and \
            self.branch_orbit_sizes == other.branch_orbit_sizes and \
            self.block_orbit_sizes == other.block_orbit_sizes


def _line_field_data(line, quartic_k, pts):
    """Restrict to the line and split the square over the smallest field
    containing the line (its definition field), so the scalar's square
    class is read in the right field."""
    e = line.definition_degree
    base = pts.base
    p = base.p
    sub = extension_field(p, base.degree * e)
    emb_sub = embed(sub, pts.ctx)
    g = _restrict_to_line(quartic_k, line)
    g_sub = [emb_sub.section(c) for c in g]
    data = square_split(g_sub, sub)
    if data is None:
        raise FieldError("bitangent restriction is not a square")
    c, h = data
    return sub, emb_sub, c, h


def exceptional_structure(surface, seed=DEFAULT_SEED):
    """Frobenius orbit sizes on the 56 exceptional curves and on their
    28 two-element blocks."""
    spec, net, quartic, lam = (surface.spec, surface.net, surface.quartic,
                               surface.lam)
    pts = splitting_data(spec, seed=seed)
    qk = map_quartic(quartic, pts.embedding)
    lines = all_bitangents(net, pts)
    pairs = {}
    for line in lines:
        sub, _, c, h = _line_field_data(line, qk, pts)
        lam_sub = embed(spec.ctx, sub).apply(lam)
        ratio = sub.mul(c, sub.inv(lam_sub))
        pairs[line.pair] = ExceptionalCurvePair(line, c, h,
                                                sub.is_square(ratio))
    branch_sizes = []
    block_sizes = []
    for orbit in line_orbits(lines, pts.ctx, pts.base.degree):
        e = len(orbit)
        block_sizes.append(e)
        verdicts = {pairs[l.pair].splits for l in orbit}
        if len(verdicts) != 1:
            raise AssertionError(
                "conjugate bitangents disagree on branch splitting"
            )
        branch_sizes.extend((e, e) if verdicts.pop() else (2 * e,))
    branch_sizes.sort()
    block_sizes.sort()
    if sum(branch_sizes) != 56 or sum(block_sizes) != 28:
        raise AssertionError("orbit size bookkeeping is inconsistent")
    return TwistReport(branch_sizes, block_sizes,
                       spec.ctx.is_square(lam),
                       [pairs[p] for p in sorted(pairs)])


def twist_invariance_check(spec, net, quartic, lambdas, seed=DEFAULT_SEED):
    """True iff the induced 28-block multiset is the same for every
    lambda (the projected action does not see the twist)."""
    if len(lambdas) < 2:
        return True
    reports = [
        exceptional_structure(TwistedSurface(spec, net, quartic, lam),
                              seed=seed)
        for lam in lambdas
    ]
    first = reports[0].block_orbit_sizes
    return all(r.block_orbit_sizes == first for r in reports)
