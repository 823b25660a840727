"""Low-level dense polynomial arithmetic on raw coefficient tuples.

Coefficients are raw field payloads (see ``octad.fields``), constant term
first, with no trailing zeros; the zero polynomial is the empty tuple.
Every routine takes the coefficient field context explicitly, so the same
code serves F_p, F_{p^d}, Q and F_p(t) coefficients.

These are the workhorses behind ``UniPoly``, the extension/function field
internals, and the factorization machinery; they avoid any per-element
wrapper objects.
"""

from __future__ import annotations


def trim(ctx, c):
    """Drop trailing zero coefficients; returns a tuple."""
    c = tuple(c)
    n = len(c)
    while n and ctx.is_zero(c[n - 1]):
        n -= 1
    return c[:n]


def deg(c):
    """Degree; -1 for the zero polynomial."""
    return len(c) - 1


def add(ctx, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = ctx.add(out[i], x)
    return trim(ctx, out)


def neg(ctx, a):
    return tuple(ctx.neg(x) for x in a)


def sub(ctx, a, b):
    return add(ctx, a, neg(ctx, b))


def scal(ctx, a, s):
    """Multiply a polynomial by a scalar."""
    if ctx.is_zero(s):
        return ()
    return trim(ctx, tuple(ctx.mul(x, s) for x in a))


def mul(ctx, a, b):
    if not a or not b:
        return ()
    out = [ctx.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if ctx.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
    return trim(ctx, out)


def divmod_(ctx, a, b):
    """Quotient and remainder; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    binv = ctx.inv(b[-1])
    rem = list(a)
    qdeg = len(a) - len(b)
    quo = [ctx.zero] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        coef = rem[k + len(b) - 1]
        if ctx.is_zero(coef):
            continue
        q = ctx.mul(coef, binv)
        quo[k] = q
        for j, y in enumerate(b):
            rem[k + j] = ctx.sub(rem[k + j], ctx.mul(q, y))
    return trim(ctx, quo), trim(ctx, rem)


def mod(ctx, a, b):
    return divmod_(ctx, a, b)[1]


def monic(ctx, a):
    if not a:
        return a
    return scal(ctx, a, ctx.inv(a[-1]))


def gcd(ctx, a, b):
    """Monic greatest common divisor."""
    while b:
        a, b = b, mod(ctx, a, b)
    return monic(ctx, a)


def xgcd(ctx, a, b):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    u0, u1 = (ctx.one,), ()
    v0, v1 = (), (ctx.one,)
    while r1:
        q, r = divmod_(ctx, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(ctx, u0, mul(ctx, q, u1))
        v0, v1 = v1, sub(ctx, v0, mul(ctx, q, v1))
    if not r0:
        return (), u0, v0
    lead = ctx.inv(r0[-1])
    return scal(ctx, r0, lead), scal(ctx, u0, lead), scal(ctx, v0, lead)


def evaluate(ctx, a, x):
    """Horner evaluation at a payload x."""
    acc = ctx.zero
    for c in reversed(a):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def derivative(ctx, a):
    out = []
    for i in range(1, len(a)):
        k = ctx.from_int(i)
        out.append(ctx.mul(a[i], k))
    return trim(ctx, out)


def pow_mod(ctx, a, e, m):
    """a^e mod m by square-and-multiply; e a nonnegative int."""
    result = (ctx.one,)
    base = mod(ctx, a, m)
    while e:
        if e & 1:
            result = mod(ctx, mul(ctx, result, base), m)
        base = mod(ctx, mul(ctx, base, base), m)
        e >>= 1
    return result


def x_poly(ctx):
    """The polynomial x."""
    return (ctx.zero, ctx.one)


def const(ctx, payload):
    return () if ctx.is_zero(payload) else (payload,)
