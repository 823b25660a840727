"""Exact matrix computations over field contexts.

The workhorse determinant router picks a strategy by coefficient field:
integer fraction-free elimination for Q (denominators cleared per
column), the batched mod-p kernel for prime fields, and an
evaluate-and-interpolate scheme over F_p(t) (evaluate at enough points
of an extension field in Zech-log form, run the batched kernel,
interpolate back; exact because the determinant degree is bounded by the
sum of columnwise entry degrees).
"""

from __future__ import annotations

import math

from octad import _kernels, _ring
from octad.fields import (
    ContextMismatch,
    FieldError,
    FunctionField,
    PrimeField,
    RationalField,
)
from octad.poly import UniPoly, interpolate

import numpy as np


class Matrix:
    """A rectangular matrix of raw payloads over one field context."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx, rows):
        self.ctx = ctx
        self.rows = [list(r) for r in rows]
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged matrix")

    @classmethod
    def from_ints(cls, ctx, rows):
        return cls(ctx, [[ctx.from_int(v) for v in r] for r in rows])

    @classmethod
    def identity(cls, ctx, n):
        return cls(ctx, [[ctx.one if i == j else ctx.zero for j in range(n)]
                         for i in range(n)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def transpose(self):
        return Matrix(self.ctx, list(zip(*self.rows)))

    def mul(self, other):
        if other.ctx != self.ctx:
            raise ContextMismatch("matrix contexts differ")
        ctx = self.ctx
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = ctx.zero
                for k, v in enumerate(r):
                    acc = ctx.add(acc, ctx.mul(v, other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(ctx, out)

    def block_diag(self, other):
        ctx = self.ctx
        z1 = [ctx.zero] * other.ncols
        z2 = [ctx.zero] * self.ncols
        return Matrix(ctx, [r + z1 for r in self.rows]
                      + [z2 + r for r in other.rows])


def bareiss_det(m):
    """Fraction-free (Bareiss) determinant; every division is exact in
    the underlying ring of entries, so this is safe over any context
    whose payloads embed an integral domain."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return m.ctx.one
    ctx = m.ctx
    a = [row[:] for row in m.rows]
    sign = 1
    prev = ctx.one
    for k in range(n - 1):
        if ctx.is_zero(a[k][k]):
            piv = next((i for i in range(k + 1, n) if not ctx.is_zero(a[i][k])), None)
            if piv is None:
                return ctx.zero
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ctx.sub(ctx.mul(a[i][j], a[k][k]), ctx.mul(a[i][k], a[k][j]))
                a[i][j] = ctx.div(num, prev)
            a[i][k] = ctx.zero
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return ctx.neg(d) if sign < 0 else d


def _rref(m):
    ctx = m.ctx
    a = [row[:] for row in m.rows]
    nr, nc = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if not ctx.is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ctx.inv(a[r][c])
        a[r] = [ctx.mul(inv, v) for v in a[r]]
        for i in range(nr):
            if i != r and not ctx.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [ctx.sub(v, ctx.mul(f, w)) for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m):
    return len(_rref(m)[1])


def kernel_basis(m):
    """Basis of the right kernel, one vector per free column in column
    order, with a 1 in the free position."""
    ctx = m.ctx
    a, pivots = _rref(m)
    nc = m.ncols
    free = [c for c in range(nc) if c not in pivots]
    out = []
    for fc in free:
        v = [ctx.zero] * nc
        v[fc] = ctx.one
        for r, pc in enumerate(pivots):
            v[pc] = ctx.neg(a[r][fc])
        out.append(v)
    return out


def _int_bareiss(rows):
    """Bareiss on plain Python integers; exact divisions throughout."""
    n = len(rows)
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_rational(m):
    from fractions import Fraction

    n = m.nrows
    scale = Fraction(1)
    cols = []
    for j in range(n):
        col = [m.rows[i][j] for i in range(n)]
        l = 1
        for v in col:
            l = l * v.denominator // math.gcd(l, v.denominator)
        scale *= l
        cols.append([int(v * l) for v in col])
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    return Fraction(_int_bareiss(rows)) / scale


def _det_prime(m):
    p = m.ctx.p
    arr = np.array([m.rows], dtype=np.int64)
    return int(_kernels.det_mod_p_batch(arr, p)[0])


def _zmul(a, b, qm1):
    if a == qm1 or b == qm1:
        return qm1
    return (a + b) % qm1


def _zadd(a, b, zech, qm1):
    if a == qm1:
        return b
    if b == qm1:
        return a
    z = int(zech[(b - a) % qm1])
    return qm1 if z == qm1 else (a + z) % qm1


def _det_function_field(m):
    ctx = m.ctx
    p = ctx.p
    n = m.nrows
    # clear denominators columnwise so entries become polynomials in t
    base = PrimeField(p)
    cols = []
    scales = []
    for j in range(n):
        col = [m.rows[i][j] for i in range(n)]
        l = (1,)
        for num, den in col:
            g = _ring.gcd(base, l, den)
            l = _ring.monic(base, _ring.mul(base, l, _ring.divmod_(base, den, g)[0]))
        scales.append(l)
        cleared = []
        for num, den in col:
            q, r = _ring.divmod_(base, l, den)
            assert not r
            cleared.append(_ring.mul(base, num, q))
        cols.append(cleared)
    bound = sum(max((len(c) - 1 for c in col if c), default=0) for col in cols)
    k = 1
    while p**k < bound + 2:
        k += 1
    zl = _kernels.ZechLog(p, k)
    qm1 = zl.qm1
    zech = zl.zech
    int_log = [zl.log(zl.ctx.from_int(c)) for c in range(p)]
    npts = bound + 1
    # evaluation points: zero, then powers of the primitive element
    pt_logs = [qm1] + list(range(npts - 1))
    mats = np.empty((npts, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            coeffs = cols[j][i]
            clogs = [int_log[c] for c in coeffs]
            for s, lx in enumerate(pt_logs):
                acc = qm1
                for cl in reversed(clogs):
                    acc = _zadd(_zmul(acc, lx, qm1), cl, zech, qm1)
                mats[s, i, j] = acc
    dets = _kernels.det_zech_batch(mats, zech, qm1)
    points = [(zl.payload(lx), zl.payload(int(d))) for lx, d in zip(pt_logs, dets)]
    poly = interpolate(zl.ctx, points)
    if k == 1:
        num = tuple(poly.coeffs)
    else:
        num = tuple(zl.ctx.lift_to_base(c) for c in poly.coeffs)
    value = ctx.normalize(num, (1,))
    for l in scales:
        value = ctx.mul(value, ctx.inv((l, (1,))))
    return value


def det(m):
    """Exact determinant with a per-field strategy; returns a payload."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    if m.nrows == 0:
        return m.ctx.one
    ctx = m.ctx
    if isinstance(ctx, RationalField):
        return _det_rational(m)
    if isinstance(ctx, PrimeField):
        return _det_prime(m)
    if isinstance(ctx, FunctionField):
        return _det_function_field(m)
    return bareiss_det(m)
