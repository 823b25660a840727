"""Bitangents of an arbitrary smooth plane quartic over a finite field,
computed without any octad: the Galois orbit-size multiset of the 28
bitangent lines, found by elimination in the dual plane.

A line {u1 + a u2 + b u3 = 0} restricts the quartic to a binary quartic
g(s,t) with coefficients g0..g4 in a, b.  When g0 is nonzero and the
characteristic is odd, g is a square times a scalar exactly when

    P1 = 8 g0^2 g3 - 4 g0 g1 g2 + g1^3      = 0
    P2 = 64 g0^3 g4 - (4 g0 g2 - g1^2)^2    = 0

(coefficient matching against g0 (s^2 + B st + C t^2)^2).  Eliminating b
by a resultant gives the a-values; the cases g0 = 0 and the two line
charts (0 : 1 : b), (0 : 0 : 1) are finished separately.  Degrees of the
irreducible factors met along the way give the orbit sizes directly; the
multiset must total 28 for a smooth quartic, which the solver asserts.
"""

from __future__ import annotations

from math import comb

from octad.factor import DEFAULT_SEED, embed, factor, one_root
from octad.fields import FieldError, FiniteField, extension_field
from octad.poly import UniPoly


class SingularQuarticError(FieldError):
    """The bitangent count does not behave like a smooth quartic's."""


# Bivariate polynomials in (a, b) are lists indexed by b-degree whose
# entries are UniPoly in a; trailing zero polynomials trimmed.

def _triml(ps):
    while ps and ps[-1].is_zero():
        ps.pop()
    return ps


def _badd(x, y):
    out = list(x) + []
    for i, p in enumerate(y):
        if i < len(out):
            out[i] = out[i] + p
        else:
            out.append(p)
    return _triml(out)


def _bmul(x, y, ctx):
    if not x or not y:
        return []
    out = [UniPoly.zero(ctx) for _ in range(len(x) + len(y) - 1)]
    for i, p in enumerate(x):
        for j, q in enumerate(y):
            out[i + j] = out[i + j] + p * q
    return _triml(out)


def _bscale(x, c, ctx):
    return _triml([p.scale(c) for p in x])


def _chart_a_panels(quartic):
    """g0..g4 of q(-(a s + b t), s, t) as bivariate polynomials."""
    from octad.octad import MONOMIALS

    ctx = quartic.ctx
    panels = [[] for _ in range(5)]
    for (e1, e2, e3), c in zip(MONOMIALS, quartic.coeffs):
        if ctx.is_zero(c):
            continue
        sign = ctx.from_int((-1) ** e1)
        for r in range(e1 + 1):
            t_deg = r + e3
            coeff = ctx.mul(c, ctx.mul(sign, ctx.from_int(comb(e1, r))))
            mono = UniPoly(ctx, [ctx.zero] * (e1 - r) + [coeff])
            panels[t_deg] = _badd(panels[t_deg], [UniPoly.zero(ctx)] * r + [mono])
    return panels


def _chart_b_panels(quartic):
    """g0..g4 of q(s, -b t, t) as univariate polynomials in b."""
    from octad.octad import MONOMIALS

    ctx = quartic.ctx
    panels = [UniPoly.zero(ctx) for _ in range(5)]
    for (e1, e2, e3), c in zip(MONOMIALS, quartic.coeffs):
        if ctx.is_zero(c):
            continue
        coeff = ctx.mul(c, ctx.from_int((-1) ** e2))
        panels[e2 + e3] = panels[e2 + e3] + UniPoly(
            ctx, [ctx.zero] * e2 + [coeff]
        )
    return panels


def _square_conditions(g, mul, scale, sub):
    """P1 and P2 from the panels, in any commutative arithmetic."""
    g0, g1, g2, g3, g4 = g
    p1 = sub(
        scale(mul(mul(g0, g0), g3), 8),
        sub(scale(mul(g0, mul(g1, g2)), 4), mul(g1, mul(g1, g1))),
    )
    inner = sub(scale(mul(g0, g2), 4), mul(g1, g1))
    p2 = sub(scale(mul(mul(g0, g0), mul(g0, g4)), 64), mul(inner, inner))
    return p1, p2


def _poly_bareiss_det(rows, ctx):
    """Bareiss over UniPoly entries; every division is exact."""
    n = len(rows)
    a = [row[:] for row in rows]
    sign = 1
    prev = UniPoly.one(ctx)
    for k in range(n - 1):
        if a[k][k].is_zero():
            piv = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if piv is None:
                return UniPoly.zero(ctx)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                assert r.is_zero()
                a[i][j] = q
            a[i][k] = UniPoly.zero(ctx)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d.scale(ctx.from_int(sign))


def _resultant_b(p1, p2, ctx):
    """Res_b of two bivariates (b-lists of a-polynomials), via the
    Sylvester matrix over the polynomial ring in a."""
    d1 = len(p1) - 1
    d2 = len(p2) - 1
    if d1 < 0 or d2 < 0:
        return UniPoly.zero(ctx)
    if d1 == 0:
        return _poly_pow(p1[0], d2)
    if d2 == 0:
        return _poly_pow(p2[0], d1)
    n = d1 + d2
    zero = UniPoly.zero(ctx)
    rows = []
    for i in range(d2):
        rows.append([zero] * i + list(reversed(p1)) + [zero] * (d2 - 1 - i))
    for i in range(d1):
        rows.append([zero] * i + list(reversed(p2)) + [zero] * (d1 - 1 - i))
    return _poly_bareiss_det(rows, ctx)


def _poly_pow(p, e):
    out = UniPoly.one(p.ctx)
    for _ in range(e):
        out = out * p
    return out


def _eval_a(biv, a0, emb):
    """Evaluate the a-variable of a bivariate at a0 (in the embedding's
    target field); returns a UniPoly in b over the target."""
    big = emb.dst
    coeffs = []
    for p in biv:
        acc = big.zero
        for c in reversed(p.coeffs):
            acc = big.add(big.mul(acc, a0), emb.apply(c))
        coeffs.append(acc)
    return UniPoly(big, coeffs)


def _map_poly(p, emb):
    return p.map_coeffs(emb.dst, emb.apply)


def _quadratic_orbits(g2, g3, g4, e1, seed):
    """Orbit sizes from the degenerate branch g0 = g1 = 0: the residual
    quadratic g2 s^2 + g3 s t + g4 t^2 must be a nonzero square, i.e.
    disc = g3^2 - 4 g2 g4 = 0; all three panels are polynomials in b
    over the field where the special a-value lives (relative degree e1)."""
    ctx = g2.ctx
    disc = g3 * g3 - (g2 * g4).scale(ctx.from_int(4))
    if disc.is_zero():
        # every b on the line of this branch works: not a smooth quartic
        # unless the residual quadratic is identically degenerate too
        raise SingularQuarticError("one-parameter family in the g0 = 0 branch")
    out = []
    for h, _ in factor(disc, seed=seed):
        e2 = h.degree
        # the residual quadratic must not vanish identically at the root
        if _vanishes_at_factor_root(h, (g2, g3, g4), seed):
            continue
        out.append(e1 * e2)
    return out


def _vanishes_at_factor_root(h, polys, seed):
    """True iff all given b-polynomials vanish at a root of irreducible h
    (equivalently h divides each)."""
    return all((p % h).is_zero() for p in polys)


def _linear_branch(panels_b, e1, seed):
    """Orbit sizes for a fixed special a-value: g0 = 0 already holds and
    panels_b = (g1..g4) as b-polynomials over the a-value's field."""
    g1, g2, g3, g4 = panels_b
    ctx = g1.ctx
    out = []
    if g1.degree > 1:
        raise AssertionError("g1 must be linear in b")
    if g1.degree == 1:
        b0 = ctx.neg(ctx.div(g1.coeff(0), g1.coeff(1)))
        q2, q3, q4 = (p.evaluate(b0) for p in (g2, g3, g4))
        if all(ctx.is_zero(v) for v in (q2, q3, q4)):
            raise SingularQuarticError("line contained in the quartic")
        disc = ctx.sub(ctx.mul(q3, q3),
                       ctx.mul(ctx.from_int(4), ctx.mul(q2, q4)))
        if ctx.is_zero(disc):
            out.append(e1)
    elif not g1.is_zero():
        pass  # g1 a nonzero constant: no bitangent on this fiber
    else:
        out.extend(_quadratic_orbits(g2, g3, g4, e1, seed))
    return out


def bitangent_degree_multiset(quartic, seed=DEFAULT_SEED):
    """Sorted orbit sizes of the base-field Frobenius on the 28
    bitangents of a smooth quartic over a finite field (sums to 28)."""
    ctx = quartic.ctx
    if not isinstance(ctx, FiniteField):
        raise FieldError("dual solver requires a finite base field")
    p = ctx.p
    e0 = ctx.degree
    orbits = []

    # ---- chart A: lines (1 : a : b) --------------------------------------
    panels = _chart_a_panels(quartic)
    zero_b = [UniPoly.zero(ctx)]
    g = [pan if pan else [] for pan in panels]
    g0b = g[0]
    if not g0b:
        raise SingularQuarticError("u3 divides the quartic")
    if len(g0b) != 1:
        raise AssertionError("g0 must not depend on b")
    g0 = g0b[0]

    def bmul(x, y):
        return _bmul(x, y, ctx)

    def bscale(x, n):
        return _bscale(x, ctx.from_int(n), ctx)

    def bsub(x, y):
        return _badd(x, _bscale(y, ctx.from_int(-1), ctx))

    p1, p2 = _square_conditions(
        [gg if gg else [] for gg in g], bmul, bscale, bsub
    )
    if not p1 and not p2:
        raise SingularQuarticError("square conditions vanish identically")
    if not p1 or not p2:
        # one condition trivial: common locus is the other's zero set,
        # a curve in the dual plane: not smooth-quartic behavior
        raise SingularQuarticError("degenerate square conditions")
    r = _resultant_b(p1, p2, ctx)
    if r.is_zero():
        raise SingularQuarticError("resultant vanishes identically")
    for m_a, _ in factor(r, seed=seed):
        if (g0 % m_a).is_zero():
            continue  # handled by the g0 = 0 branch below
        e1 = m_a.degree
        big = extension_field(p, e0 * e1)
        emb = embed(ctx, big)
        import random

        a0 = one_root(_map_poly(m_a, emb), p ** (e0 * e1),
                      random.Random(seed))
        f1 = _eval_a(p1, a0, emb)
        f2 = _eval_a(p2, a0, emb)
        if f1.is_zero() and f2.is_zero():
            raise SingularQuarticError("infinitely many bitangent candidates")
        h = f1.gcd(f2) if not f1.is_zero() and not f2.is_zero() else \
            (f2 if f1.is_zero() else f1).monic()
        for hb, _ in factor(h, seed=seed):
            orbits.append(e1 * hb.degree)
    # g0 = 0 fibers of chart A
    for m_a, _ in factor(g0, seed=seed):
        e1 = m_a.degree
        big = extension_field(p, e0 * e1)
        emb = embed(ctx, big)
        import random

        a0 = one_root(_map_poly(m_a, emb), p ** (e0 * e1),
                      random.Random(seed))
        panels_b = [_eval_a(g[k] if g[k] else [], a0, emb) for k in range(1, 5)]
        orbits.extend(_linear_branch(panels_b, e1, seed))

    # ---- chart B: lines (0 : 1 : b) --------------------------------------
    pb = _chart_b_panels(quartic)
    g0c = pb[0]
    if g0c.degree > 0:
        raise AssertionError("chart B leading panel must be constant")
    if not g0c.is_zero():
        c0 = g0c.coeff(0)

        def m(x, y):
            return x * y

        def sc(x, n):
            return x.scale(ctx.from_int(n))

        def sb(x, y):
            return x - y

        q1, q2 = _square_conditions(
            [UniPoly(ctx, (c0,)), pb[1], pb[2], pb[3], pb[4]], m, sc, sb
        )
        if q1.is_zero() and q2.is_zero():
            raise SingularQuarticError("infinitely many chart-B bitangents")
        h = q1.gcd(q2) if not q1.is_zero() and not q2.is_zero() else \
            (q2 if q1.is_zero() else q1).monic()
        for hb, _ in factor(h, seed=seed):
            orbits.append(hb.degree)
    else:
        orbits.extend(_linear_branch(pb[1:], 1, seed))

    # ---- chart C: the line (0 : 0 : 1), i.e. u3 = 0 ----------------------
    from octad.bitangents import square_split

    gc = [ctx.zero] * 5
    from octad.octad import MONOMIALS

    for (e1, e2, e3), c in zip(MONOMIALS, quartic.coeffs):
        if e3 == 0:
            gc[e2] = ctx.add(gc[e2], c)
    if all(ctx.is_zero(v) for v in gc):
        raise SingularQuarticError("u3 = 0 is contained in the quartic")
    if square_split(gc, ctx) is not None:
        orbits.append(1)

    orbits.sort()
    if sum(orbits) != 28:
        raise SingularQuarticError(
            f"bitangent orbit sizes sum to {sum(orbits)}, not 28"
        )
    return orbits
