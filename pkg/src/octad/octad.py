"""Construction pipeline: trace normalization, octad nonsingularity
certificates, the net of quadrics through the eight points
(1 : x : x^2 : x^4), and its determinantal ternary quartic.

The nonsingularity certificate is the determinant of the derivation
operator on the fourth exterior power of the companion matrix of f: its
eigenvalues are the 70 subset sums of four roots, so the determinant
vanishes exactly when four of the eight base points are coplanar.
"""

from __future__ import annotations

import itertools

from octad.fields import (
    ExtensionField,
    FieldError,
    FiniteField,
    PrimeField,
    extension_field,
)
from octad.linalg import Matrix, det, kernel_basis
from octad.poly import UniPoly

#: Exponent tuples of the 15 quartic monomials in graded-lex order.
MONOMIALS = [
    (4, 0, 0), (3, 1, 0), (3, 0, 1), (2, 2, 0), (2, 1, 1), (2, 0, 2),
    (1, 3, 0), (1, 2, 1), (1, 1, 2), (1, 0, 3), (0, 4, 0), (0, 3, 1),
    (0, 2, 2), (0, 1, 3), (0, 0, 4),
]


class TernaryPoly:
    """Sparse polynomial in u1, u2, u3 over a field context (payloads)."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if not ctx.is_zero(c):
                    self.terms[e] = c

    @classmethod
    def variable(cls, ctx, i):
        e = [0, 0, 0]
        e[i] = 1
        return cls(ctx, {tuple(e): ctx.one})

    @classmethod
    def constant(cls, ctx, c):
        return cls(ctx, {(0, 0, 0): c})

    def __add__(self, other):
        out = dict(self.terms)
        ctx = self.ctx
        for e, c in other.terms.items():
            out[e] = ctx.add(out.get(e, ctx.zero), c)
        return TernaryPoly(ctx, out)

    def __sub__(self, other):
        return self + other.scale(self.ctx.from_int(-1))

    def __mul__(self, other):
        ctx = self.ctx
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                v = ctx.mul(c1, c2)
                out[e] = ctx.add(out.get(e, ctx.zero), v)
        return TernaryPoly(ctx, out)

    def scale(self, c):
        ctx = self.ctx
        return TernaryPoly(ctx, {e: ctx.mul(c, v) for e, v in self.terms.items()})

    def derivative(self, i):
        ctx = self.ctx
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                en = list(e)
                en[i] -= 1
                out[tuple(en)] = ctx.mul(ctx.from_int(e[i]), c)
        return TernaryPoly(ctx, out)

    def substitute(self, subs):
        """Compose with three TernaryPoly images of u1, u2, u3."""
        ctx = self.ctx
        out = TernaryPoly(ctx)
        for e, c in self.terms.items():
            term = TernaryPoly.constant(ctx, c)
            for i in range(3):
                for _ in range(e[i]):
                    term = term * subs[i]
            out = out + term
        return out

    def evaluate(self, point):
        ctx = self.ctx
        acc = ctx.zero
        for e, c in self.terms.items():
            v = c
            for i in range(3):
                for _ in range(e[i]):
                    v = ctx.mul(v, point[i])
            acc = ctx.add(acc, v)
        return acc

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, TernaryPoly) and self.ctx == other.ctx \
            and self.terms == other.terms


def _poly_det(entries):
    """Determinant of a small square matrix of TernaryPoly by cofactor
    expansion along the first row."""
    n = len(entries)
    if n == 1:
        return entries[0][0]
    ctx = entries[0][0].ctx
    acc = TernaryPoly(ctx)
    for j in range(n):
        minor = [[row[k] for k in range(n) if k != j] for row in entries[1:]]
        cof = entries[0][j] * _poly_det(minor)
        if j % 2:
            cof = cof.scale(ctx.from_int(-1))
        acc = acc + cof
    return acc


class OctadSpec:
    """A monic degree-8 polynomial defining the octad (1 : x : x^2 : x^4)
    over its roots; normalized means the degree-7 coefficient vanishes."""

    __slots__ = ("ctx", "f", "normalized")

    def __init__(self, f):
        if f.degree != 8 or not f.is_monic():
            raise ValueError("octad spec requires a monic polynomial of degree 8")
        self.ctx = f.ctx
        self.f = f
        self.normalized = self.ctx.is_zero(f.coeff(7))


class Certificate:
    __slots__ = ("separable", "subset_sum_det", "passes")

    def __init__(self, separable, subset_sum_det, passes):
        self.separable = separable
        self.subset_sum_det = subset_sum_det
        self.passes = passes


class SymmetricQuadric:
    """A symmetric 4x4 matrix; the quadric is (T0..T3) M (T0..T3)^t."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        if matrix.nrows != 4 or matrix.ncols != 4:
            raise ValueError("quadric matrix must be 4x4")
        ctx = matrix.ctx
        for i in range(4):
            for j in range(i):
                if not ctx.eq(matrix.rows[i][j], matrix.rows[j][i]):
                    raise ValueError("quadric matrix must be symmetric")
        self.matrix = matrix

    @property
    def ctx(self):
        return self.matrix.ctx

    def restrict_to_curve(self):
        """q(1, T, T^2, T^4) as a univariate polynomial (the pullback to
        the rational normal curve carrying the octad)."""
        ctx = self.ctx
        weights = (0, 1, 2, 4)
        coeffs = [ctx.zero] * 9
        for i in range(4):
            for j in range(4):
                w = weights[i] + weights[j]
                coeffs[w] = ctx.add(coeffs[w], self.matrix.rows[i][j])
        return UniPoly(ctx, coeffs)


class NetOfQuadrics:
    __slots__ = ("m1", "m2", "m3")

    def __init__(self, m1, m2, m3):
        self.m1 = m1
        self.m2 = m2
        self.m3 = m3

    @property
    def ctx(self):
        return self.m1.ctx

    def quadrics(self):
        return (self.m1, self.m2, self.m3)

    def member(self, u):
        """The symmetric matrix u1*M1 + u2*M2 + u3*M3 (payload triple u)."""
        ctx = self.ctx
        rows = []
        for i in range(4):
            row = []
            for j in range(4):
                acc = ctx.zero
                for c, q in zip(u, self.quadrics()):
                    acc = ctx.add(acc, ctx.mul(c, q.matrix.rows[i][j]))
                row.append(acc)
            rows.append(row)
        return Matrix(ctx, rows)


class TernaryQuartic:
    """15 coefficients in the graded-lex monomial order of MONOMIALS."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != 15:
            raise ValueError("a ternary quartic has 15 coefficients")
        self.ctx = ctx
        self.coeffs = coeffs

    @classmethod
    def from_poly(cls, poly):
        ctx = poly.ctx
        for e in poly.terms:
            if sum(e) != 4:
                raise ValueError("polynomial is not homogeneous of degree 4")
        return cls(ctx, [poly.terms.get(e, ctx.zero) for e in MONOMIALS])

    def to_poly(self):
        return TernaryPoly(self.ctx, dict(zip(MONOMIALS, self.coeffs)))

    def __eq__(self, other):
        return isinstance(other, TernaryQuartic) and self.ctx == other.ctx \
            and all(self.ctx.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def to_str(self):
        names = []
        for e, c in zip(MONOMIALS, self.coeffs):
            if self.ctx.is_zero(c):
                continue
            mono = "*".join(
                f"u{i+1}" + (f"^{e[i]}" if e[i] > 1 else "")
                for i in range(3) if e[i]
            )
            names.append(f"({self.ctx.to_str(c)})*{mono}")
        return " + ".join(names) if names else "0"


def normalize_trace(f):
    """Shift the variable so the degree-7 coefficient (the root trace, up
    to sign) vanishes: returns the spec of f(T - c7/8)."""
    ctx = f.ctx
    if f.degree != 8 or not f.is_monic():
        raise ValueError("normalize_trace requires a monic polynomial of degree 8")
    c7 = f.coeff(7)
    if ctx.is_zero(c7):
        return OctadSpec(f)
    shift = ctx.neg(ctx.div(c7, ctx.from_int(8)))
    g = f.shift(shift)
    spec = OctadSpec(g)
    assert spec.normalized
    return spec


def companion_matrix(f):
    """Companion matrix of a monic degree-n polynomial: C e_i = e_{i+1}
    for i < n-1 and C e_{n-1} = -sum c_j e_j (columns are images)."""
    ctx = f.ctx
    n = f.degree
    rows = [[ctx.zero] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i + 1][i] = ctx.one
    for j in range(n):
        rows[j][n - 1] = ctx.neg(f.coeff(j))
    return Matrix(ctx, rows)


def derivation_on_wedge4(c):
    """Matrix of the operator e_S -> sum over slots of replacing one
    factor e_i by C e_i, on the 70-dimensional fourth exterior power of
    an 8-dimensional space; basis: 4-subsets of {0..7} in lex order."""
    ctx = c.ctx
    subsets = list(itertools.combinations(range(8), 4))
    index = {s: k for k, s in enumerate(subsets)}
    n = len(subsets)
    rows = [[ctx.zero] * n for _ in range(n)]
    for col, s in enumerate(subsets):
        for slot in range(4):
            i = s[slot]
            rest = s[:slot] + s[slot + 1 :]
            for j in range(8):
                cij = c.rows[j][i]
                if ctx.is_zero(cij) or j in rest:
                    continue
                merged = tuple(sorted(rest + (j,)))
                # sign: moves to sort j into the remaining three indices
                pos = merged.index(j)
                sign = (-1) ** (slot + pos)
                v = cij if sign > 0 else ctx.neg(cij)
                r = index[merged]
                rows[r][col] = ctx.add(rows[r][col], v)
    return Matrix(ctx, rows)


def certify_octad(spec):
    """Nonsingularity certificate: f separable and no four roots coplanar
    (no 4-subset of roots sums to zero), the latter as an exact 70x70
    determinant."""
    if not spec.normalized:
        raise ValueError("certify_octad requires a normalized spec")
    f = spec.f
    separable = f.gcd(f.derivative()).degree == 0
    d = det(derivation_on_wedge4(companion_matrix(f)))
    passes = separable and not spec.ctx.is_zero(d)
    return Certificate(separable, d, passes)


def build_net(spec):
    """The canonical basis (q1, q2, q3) of the net of quadrics through
    the octad, with q1 = T1^2 - T0 T2, q2 = T2^2 - T0 T3 and q3 read off
    the coefficients of f."""
    ctx = spec.ctx
    if not spec.normalized:
        raise ValueError("build_net requires a normalized spec (no T^7 term)")
    half = ctx.inv(ctx.from_int(2))
    nh = ctx.neg(half)
    z, o = ctx.zero, ctx.one
    m1 = Matrix(ctx, [[z, z, nh, z], [z, o, z, z], [nh, z, z, z], [z, z, z, z]])
    m2 = Matrix(ctx, [[z, z, z, nh], [z, z, z, z], [z, z, o, z], [nh, z, z, z]])
    c = [f_c for f_c in (spec.f.coeff(i) for i in range(7))]
    h = lambda v: ctx.mul(half, v)
    m3 = Matrix(ctx, [
        [c[0], h(c[1]), h(c[2]), h(c[4])],
        [h(c[1]), z, h(c[3]), h(c[5])],
        [h(c[2]), h(c[3]), z, h(c[6])],
        [h(c[4]), h(c[5]), h(c[6]), o],
    ])
    net = NetOfQuadrics(*(SymmetricQuadric(m) for m in (m1, m2, m3)))
    # postconditions: q1, q2 vanish on the curve, q3 restricts to f
    assert net.m1.restrict_to_curve().is_zero()
    assert net.m2.restrict_to_curve().is_zero()
    assert net.m3.restrict_to_curve() == spec.f
    return net


# index pairs (i <= j) for the 10 entries of a symmetric 4x4 matrix
_SYM_PAIRS = [(i, j) for i in range(4) for j in range(i, 4)]


def net_kernel_oracle(spec):
    """Independent recomputation of the net: solve the linear system
    q(1,T,T^2,T^4) = c*f in the 10 entries of a symmetric matrix plus
    the scalar c, and return an echelonized basis of the quadric part."""
    ctx = spec.ctx
    weights = (0, 1, 2, 4)
    rows = [[ctx.zero] * 11 for _ in range(9)]
    for col, (i, j) in enumerate(_SYM_PAIRS):
        w = weights[i] + weights[j]
        mult = ctx.one if i == j else ctx.from_int(2)
        rows[w][col] = ctx.add(rows[w][col], mult)
    for k in range(9):
        rows[k][10] = ctx.neg(spec.f.coeff(k))
    basis = kernel_basis(Matrix(ctx, rows))
    out = []
    for v in basis:
        m = [[ctx.zero] * 4 for _ in range(4)]
        for col, (i, j) in enumerate(_SYM_PAIRS):
            m[i][j] = v[col]
            m[j][i] = v[col]
        out.append(SymmetricQuadric(Matrix(ctx, m)))
    return out


def det_quartic(net):
    """Exact expansion of det(u1 M1 + u2 M2 + u3 M3)."""
    ctx = net.ctx
    us = [TernaryPoly.variable(ctx, i) for i in range(3)]
    entries = []
    for i in range(4):
        row = []
        for j in range(4):
            acc = TernaryPoly(ctx)
            for u, q in zip(us, net.quadrics()):
                acc = acc + u.scale(q.matrix.rows[i][j])
            row.append(acc)
        entries.append(row)
    return TernaryQuartic.from_poly(_poly_det(entries))


def _scan_polys(quartic):
    q = quartic.to_poly()
    return [q, q.derivative(0), q.derivative(1), q.derivative(2)]


def smooth_bruteforce(quartic):
    """Scan P^2 over the quadratic extension of the coefficient field for
    a point where the quartic and its gradient all vanish.  A partial
    check by design: singular points of higher degree are the
    certificate's responsibility, not the scan's."""
    import numpy as np

    from octad import _kernels
    from octad.factor import embed

    ctx = quartic.ctx
    if not isinstance(ctx, FiniteField):
        raise FieldError("smooth_bruteforce requires a finite field")
    if ctx.order > 121:
        raise FieldError("field too large for the enumeration bound (order 121)")
    p = ctx.p
    deg = 1 if isinstance(ctx, PrimeField) else ctx.degree
    zl = _kernels.ZechLog(p, 2 * deg)
    emb = embed(ctx, zl.ctx)
    qm1 = zl.qm1
    polys = _scan_polys(quartic)
    term_data = []
    for poly in polys:
        exps = np.array(list(poly.terms.keys()) or [(0, 0, 0)], dtype=np.int64)
        clogs = np.array(
            [zl.log(emb.apply(c)) for c in poly.terms.values()] or [qm1],
            dtype=np.int64,
        )
        term_data.append((exps, clogs))

    def chunk_singular(l1, l2, l3):
        vals = [
            _kernels.eval_terms_batch(l1, l2, l3, exps, clogs, zl.zech, qm1)
            for exps, clogs in term_data
        ]
        hit = np.ones(l1.shape, dtype=bool)
        for v in vals:
            hit &= v == qm1
        return bool(hit.any())

    m = zl.q
    all_logs = np.concatenate(
        [np.array([qm1], dtype=np.int64), np.arange(qm1, dtype=np.int64)]
    )
    one = np.zeros(1, dtype=np.int64)  # log 0 = the element 1
    # chart (0,0,1)
    sentinel = np.full(1, qm1, dtype=np.int64)
    if chunk_singular(sentinel, sentinel, one):
        return False
    # chart (0,1,z)
    if chunk_singular(np.full(m, qm1, dtype=np.int64),
                      np.zeros(m, dtype=np.int64), all_logs):
        return False
    # chart (1,y,z), chunked
    chunk = 1 << 20
    ys = np.repeat(all_logs, m)
    zs = np.tile(all_logs, m)
    for s in range(0, m * m, chunk):
        l2 = ys[s : s + chunk]
        l3 = zs[s : s + chunk]
        l1 = np.zeros(l2.shape, dtype=np.int64)
        if chunk_singular(l1, l2, l3):
            return False
    return True
