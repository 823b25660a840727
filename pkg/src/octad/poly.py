"""Dense univariate polynomials over an exact field context."""

from __future__ import annotations

from octad import _ring
from octad.fields import ContextMismatch, FieldElement


class UniPoly:
    """A dense univariate polynomial over a field context.

    Coefficients are stored constant-term first as raw payloads with no
    trailing zeros; the zero polynomial has an empty coefficient tuple
    and degree -1.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs, raw=True):
        self.ctx = ctx
        if not raw:
            coeffs = [c.value if isinstance(c, FieldElement) else ctx.from_int(c) for c in coeffs]
        self.coeffs = _ring.trim(ctx, coeffs)

    @classmethod
    def from_ints(cls, ctx, ints):
        return cls(ctx, [ctx.from_int(n) for n in ints])

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (ctx.one,))

    @classmethod
    def x(cls, ctx):
        return cls(ctx, (ctx.zero, ctx.one))

    @classmethod
    def constant(cls, ctx, payload):
        return cls(ctx, _ring.const(ctx, payload))

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        """Coefficient of T^i as a raw payload."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ContextMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        return UniPoly(self.ctx, _ring.add(self.ctx, self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return UniPoly(self.ctx, _ring.sub(self.ctx, self.coeffs, other.coeffs))

    def __neg__(self):
        return UniPoly(self.ctx, _ring.neg(self.ctx, self.coeffs))

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            self._check(other)
            return UniPoly(self.ctx, _ring.mul(self.ctx, self.coeffs, other.coeffs))
        raise TypeError("use .scale for scalar multiplication")

    def scale(self, payload):
        return UniPoly(self.ctx, _ring.scal(self.ctx, self.coeffs, payload))

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = _ring.divmod_(self.ctx, self.coeffs, other.coeffs)
        return UniPoly(self.ctx, q), UniPoly(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other):
        """Monic gcd."""
        self._check(other)
        return UniPoly(self.ctx, _ring.gcd(self.ctx, self.coeffs, other.coeffs))

    def derivative(self):
        return UniPoly(self.ctx, _ring.derivative(self.ctx, self.coeffs))

    def monic(self):
        return UniPoly(self.ctx, _ring.monic(self.ctx, self.coeffs))

    def evaluate(self, x):
        """Evaluate at a raw payload or FieldElement; returns the same kind."""
        if isinstance(x, FieldElement):
            return self.ctx.wrap(self.evaluate(x.value))
        return _ring.evaluate(self.ctx, self.coeffs, x)

    def compose(self, other):
        """self(other), by Horner over the polynomial ring."""
        self._check(other)
        acc = UniPoly.zero(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly.constant(self.ctx, c)
        return acc

    def shift(self, payload):
        """self(T + c) for a raw payload c."""
        return self.compose(UniPoly(self.ctx, (payload, self.ctx.one)))

    def pow_mod(self, e, m):
        """self^e mod m."""
        self._check(m)
        return UniPoly(self.ctx, _ring.pow_mod(self.ctx, self.coeffs, e, m.coeffs))

    def map_coeffs(self, target_ctx, fn):
        """Apply payload map fn into another field context."""
        return UniPoly(target_ctx, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and other.ctx == self.ctx
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((id(type(self.ctx)), self.coeffs))

    def to_str(self, var="T"):
        if not self.coeffs:
            return "0"
        ctx = self.ctx
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if ctx.is_zero(c):
                continue
            cs = ctx.to_str(c)
            if i == 0:
                terms.append(cs)
                continue
            mono = var if i == 1 else f"{var}^{i}"
            if c == ctx.one:
                terms.append(mono)
            elif any(ch in cs for ch in "+-/") and not cs.lstrip("-").isdigit():
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return self.to_str()


def is_separable(f):
    """True iff gcd(f, f') is constant.  Raises on the zero polynomial."""
    if f.is_zero():
        raise ValueError("separability is undefined for the zero polynomial")
    return f.gcd(f.derivative()).degree == 0


def resultant(f, g):
    """Resultant of two nonzero polynomials, by the subresultant-free
    Euclid recursion; returns a raw payload.

    Used only as a test oracle, so plain field arithmetic is fine.
    """
    ctx = f.ctx
    if f.is_zero() or g.is_zero():
        return ctx.zero
    acc = ctx.one
    a, b = f, g
    while True:
        if b.degree == 0:
            return ctx.mul(acc, ctx.pow(b.leading(), a.degree))
        r = a % b
        if r.is_zero():
            return ctx.zero
        sign = ctx.from_int(-1 if (a.degree * b.degree) % 2 else 1)
        acc = ctx.mul(acc, sign)
        acc = ctx.mul(acc, ctx.pow(b.leading(), a.degree - r.degree))
        a, b = b, r


def interpolate(ctx, points):
    """Newton interpolation through [(x, y)] pairs of raw payloads over a
    field context; the x values must be pairwise distinct."""
    xs = [x for x, _ in points]
    coeffs = [y for _, y in points]
    n = len(points)
    # divided differences in place
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = ctx.sub(coeffs[i], coeffs[i - 1])
            den = ctx.sub(xs[i], xs[i - j])
            coeffs[i] = ctx.div(num, den)
    out = UniPoly.zero(ctx)
    for i in range(n - 1, -1, -1):
        shift = UniPoly(ctx, (ctx.neg(xs[i]), ctx.one))
        out = out * shift + UniPoly(ctx, (coeffs[i],))
    return out
