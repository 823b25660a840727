"""Bitangents of the constructed quartic over finite fields: split f,
build the eight octad points in one extension field, compute the 28
pair bitangents through the net's polar forms, verify each restriction
is a nonzero perfect square, and compare the Frobenius orbit structure
with the induced action on 2-subsets of the eight points.
"""

from __future__ import annotations

from math import lcm

from octad.factor import DEFAULT_SEED, embed, factor, one_root
from octad.fields import ExtensionField, FieldError, PrimeField, extension_field
from octad.linalg import Matrix, kernel_basis
from octad.octad import TernaryQuartic
from octad.perms import Permutation, two_set_action

PAIRS = [(i, j) for i in range(8) for j in range(i + 1, 8)]


class OctadPoints:
    """The eight points (1 : x : x^2 : x^4) over the splitting field of
    f, with the permutation induced by the base-field Frobenius."""

    __slots__ = ("base", "ctx", "embedding", "roots", "points", "frobenius_perm",
                 "factor_degrees")

    def __init__(self, base, ctx, embedding, roots, frobenius_perm, factor_degrees):
        self.base = base
        self.ctx = ctx
        self.embedding = embedding
        self.roots = roots
        self.frobenius_perm = frobenius_perm
        self.factor_degrees = factor_degrees
        self.points = [
            (ctx.one, x, ctx.mul(x, x), ctx.pow(x, 4)) for x in roots
        ]


def _base_degree(base):
    return 1 if isinstance(base, PrimeField) else base.degree


def _base_frobenius(ctx, steps):
    """x -> x^(p^steps) on an extension field (identity on a prime field)."""
    if isinstance(ctx, PrimeField):
        return lambda x: x
    return lambda x: ctx.frobenius_iter(x, steps)


def splitting_data(spec, seed=DEFAULT_SEED):
    """Roots of f in F_{q0^d}, d = lcm of the factor degrees, indexed by
    factor (canonical order) and Frobenius orbit within each factor."""
    base = spec.ctx
    f = spec.f
    if f.gcd(f.derivative()).degree != 0:
        raise ValueError("splitting_data requires a separable polynomial")
    import random

    rng = random.Random(seed)
    p = base.p
    e0 = _base_degree(base)
    factors = factor(f, seed=seed)
    degrees = [g.degree for g, _ in factors]
    d = lcm(*degrees)
    big = extension_field(p, e0 * d)
    emb = embed(base, big)
    frob = _base_frobenius(big, e0)
    roots = []
    for g, _ in factors:
        gk = emb.map_poly(g)
        e = g.degree
        r = one_root(gk, p ** (e0 * e), rng)
        orbit = [r]
        for _ in range(e - 1):
            orbit.append(frob(orbit[-1]))
        # canonical starting root: minimal in the orbit
        start = min(range(e), key=lambda i: big.sort_key(orbit[i]))
        roots.extend(orbit[start:] + orbit[:start])
    if len(set(roots)) != 8:
        raise FieldError("roots of f are not pairwise distinct")
    total = big.zero
    for r in roots:
        total = big.add(total, r)
    if not big.is_zero(total):
        raise FieldError("root sum is nonzero; spec is not normalized")
    index = {r: i for i, r in enumerate(roots)}
    perm = Permutation([index[frob(r)] for r in roots])
    return OctadPoints(base, big, emb, roots, perm, degrees)


class BitangentLine:
    """A bitangent {b1 u1 + b2 u2 + b3 u3 = 0}, normalized so the first
    nonzero coefficient is 1."""

    __slots__ = ("pair", "ctx", "coeffs", "definition_degree")

    def __init__(self, pair, ctx, coeffs, definition_degree):
        self.pair = pair
        self.ctx = ctx
        self.coeffs = coeffs
        self.definition_degree = definition_degree

    def __eq__(self, other):
        return isinstance(other, BitangentLine) and self.ctx == other.ctx \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)


def _normalize_line(ctx, coeffs):
    lead = next((c for c in coeffs if not ctx.is_zero(c)), None)
    if lead is None:
        raise ValueError("zero polar vector (degenerate octad)")
    inv = ctx.inv(lead)
    return tuple(ctx.mul(inv, c) for c in coeffs)


def _definition_degree(ctx, e0, coeffs):
    """Smallest e with all coefficients fixed by x -> x^(q0^e)."""
    if isinstance(ctx, PrimeField):
        return 1
    d = ctx.degree // e0
    for e in range(1, d + 1):
        if d % e:
            continue
        frob = _base_frobenius(ctx, e0 * e)
        if all(frob(c) == c for c in coeffs):
            return e
    raise AssertionError("coefficients not fixed by the full field Frobenius")


def bitangent_of_pair(net, pts, i, j):
    """The bitangent of the pair (P_i, P_j): b_k = P_i^t M_k P_j."""
    if i == j:
        raise ValueError("bitangent_of_pair requires distinct indices")
    ctx = pts.ctx
    emb = pts.embedding
    pi, pj = pts.points[i], pts.points[j]
    coeffs = []
    for quad in net.quadrics():
        acc = ctx.zero
        for a in range(4):
            for b in range(4):
                m = emb.apply(quad.matrix.rows[a][b])
                acc = ctx.add(acc, ctx.mul(ctx.mul(pi[a], m), pj[b]))
        coeffs.append(acc)
    norm = _normalize_line(ctx, coeffs)
    e0 = _base_degree(pts.base)
    return BitangentLine(tuple(sorted((i, j))), ctx, norm,
                         _definition_degree(ctx, e0, norm))


def _restrict_to_line(quartic, line):
    """Binary quartic g(s,t): the quartic pulled back to s v + t w where
    (v, w) is the deterministic kernel basis of the line form."""
    ctx = quartic.ctx
    basis = kernel_basis(Matrix(ctx, [list(line.coeffs)]))
    if len(basis) != 2:
        raise ValueError("line coefficients do not define a line")
    v, w = basis
    # coords[k] = v[k]*s + t*w[k] as a binary linear form; expand powers
    g = [ctx.zero] * 5

    def bin_mul(a, b):
        out = [ctx.zero] * (len(a) + len(b) - 1)
        for x, ca in enumerate(a):
            for y, cb in enumerate(b):
                out[x + y] = ctx.add(out[x + y], ctx.mul(ca, cb))
        return out

    from octad.octad import MONOMIALS

    for e, c in zip(MONOMIALS, quartic.coeffs):
        if ctx.is_zero(c):
            continue
        term = [c]
        for k in range(3):
            for _ in range(e[k]):
                term = bin_mul(term, [v[k], w[k]])
        for deg, cc in enumerate(term):
            g[deg] = ctx.add(g[deg], cc)
    return g  # g[k] = coefficient of s^(4-k) t^k


def square_split(g, ctx):
    """Decide whether a binary quartic is c * h^2; returns (c, h) with h
    monic-in-s coefficients (h0, h1, h2) in the sheared frame, or None.

    The test shears t -> t + a*s until the s^4 coefficient is nonzero,
    then matches coefficients of (s^2 + b st + g t^2)^2.  If no shear
    works the quartic has more distinct roots than a square can have.
    """
    if all(ctx.is_zero(c) for c in g):
        raise ValueError("zero restriction: line contained in the quartic")
    shear = None
    if not ctx.is_zero(g[0]):
        gs = list(g)
    else:
        gs = None
        for a in ctx.elements():
            # leading coefficient after t -> t + a s is g(1, a)
            val = ctx.zero
            for c in reversed(g):
                val = ctx.add(ctx.mul(val, a), c)
            if not ctx.is_zero(val):
                shear = a
                break
        if shear is None:
            # a nonzero quartic vanishing at every (1 : a) and at (0 : 1)
            # has more than 4 roots only over tiny fields; not a square
            return None
        gs = _shear_binary(g, ctx, shear)
    c = gs[0]
    inv = ctx.inv(c)
    m = [ctx.mul(inv, v) for v in gs]
    half = ctx.inv(ctx.from_int(2))
    beta = ctx.mul(half, m[1])
    gamma = ctx.mul(half, ctx.sub(m[2], ctx.mul(beta, beta)))
    if not ctx.eq(m[3], ctx.mul(ctx.from_int(2), ctx.mul(beta, gamma))):
        return None
    if not ctx.eq(m[4], ctx.mul(gamma, gamma)):
        return None
    return c, (ctx.one, beta, gamma)


def _shear_binary(g, ctx, a):
    """Coefficients of g(s, t + a*s)."""
    from math import comb

    out = [ctx.zero] * 5
    for k, c in enumerate(g):
        # c * s^(4-k) * (t + a s)^k
        for r in range(k + 1):
            coeff = ctx.mul(c, ctx.mul(ctx.from_int(comb(k, r)),
                                       ctx.pow(a, k - r)))
            # contributes to s^(4-k+k-r) t^r
            out[r] = ctx.add(out[r], coeff)
    return out


def is_bitangent(quartic, line):
    """True iff the restriction of the quartic to the line is a nonzero
    perfect square up to a scalar."""
    g = _restrict_to_line(quartic, line)
    return square_split(g, quartic.ctx) is not None


def map_quartic(quartic, embedding):
    """Push a ternary quartic through a field embedding."""
    return TernaryQuartic(
        embedding.dst, [embedding.apply(c) for c in quartic.coeffs]
    )


def all_bitangents(net, pts):
    return [bitangent_of_pair(net, pts, i, j) for i, j in PAIRS]


def line_orbits(lines, ctx, e0):
    """Partition bitangent lines into Frobenius orbits; checks that each
    orbit size equals its members' definition degree."""
    frob = _base_frobenius(ctx, e0)
    by_coeffs = {l.coeffs: l for l in lines}
    seen = set()
    orbits = []
    for l in lines:
        if l.coeffs in seen:
            continue
        orbit = []
        cur = l.coeffs
        while cur not in seen:
            seen.add(cur)
            if cur not in by_coeffs:
                raise AssertionError("Frobenius does not permute the lines")
            orbit.append(by_coeffs[cur])
            cur = _normalize_line(ctx, tuple(frob(c) for c in cur))
        for member in orbit:
            if member.definition_degree != len(orbit):
                raise AssertionError(
                    "definition degree differs from the Frobenius orbit size"
                )
        orbits.append(orbit)
    return orbits


class OrbitReport:
    __slots__ = ("factorization_type", "two_set_orbit_sizes",
                 "bitangent_orbit_sizes", "match", "equivariant",
                 "all_squares", "lines")

    def __init__(self, factorization_type, two_set_orbit_sizes,
                 bitangent_orbit_sizes, match, equivariant, all_squares, lines):
        self.factorization_type = factorization_type
        self.two_set_orbit_sizes = two_set_orbit_sizes
        self.bitangent_orbit_sizes = bitangent_orbit_sizes
        self.match = match
        self.equivariant = equivariant
        self.all_squares = all_squares
        self.lines = lines


def orbit_report(spec, net, quartic, seed=DEFAULT_SEED):
    """Compare the Frobenius orbit structure of the 28 bitangents with
    the 2-subset action of the root permutation, and check the exact
    equivariance frobenius(l_ij) = l_(pi i, pi j)."""
    pts = splitting_data(spec, seed=seed)
    ctx = pts.ctx
    lines = all_bitangents(net, pts)
    by_pair = {l.pair: l for l in lines}
    if len({l.coeffs for l in lines}) != 28:
        raise AssertionError("bitangent lines are not pairwise distinct")
    qk = map_quartic(quartic, pts.embedding)
    all_squares = all(is_bitangent(qk, l) for l in lines)
    e0 = _base_degree(pts.base)
    frob = _base_frobenius(ctx, e0)
    pi = pts.frobenius_perm
    equivariant = True
    for l in lines:
        i, j = l.pair
        image = _normalize_line(ctx, tuple(frob(c) for c in l.coeffs))
        target = by_pair[tuple(sorted((pi(i), pi(j))))]
        if image != target.coeffs:
            equivariant = False
    orbits = line_orbits(lines, ctx, e0)
    two_set = sorted(len(c) for c in two_set_action(pi).cycles())
    bit_orbits = sorted(len(o) for o in orbits)
    return OrbitReport(
        factorization_type=sorted(pts.factor_degrees),
        two_set_orbit_sizes=two_set,
        bitangent_orbit_sizes=bit_orbits,
        match=two_set == bit_orbits,
        equivariant=equivariant,
        all_squares=all_squares,
        lines=lines,
    )
