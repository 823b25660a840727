"""Exact field contexts and their raw element arithmetic.

Four kinds of field are supported, all of characteristic != 2:

* ``RationalField``            -- Q, payloads are ``fractions.Fraction``,
* ``PrimeField(p)``            -- F_p for odd p, payloads are ints in [0, p),
* ``ExtensionField(p, m)``     -- F_{p^d} = F_p[z]/(m), payloads are tuples
                                  of d ints (coefficients of 1, z, .., z^{d-1}),
* ``FunctionField(p)``         -- F_p(t), payloads are reduced fractions
                                  (num, den) of coefficient tuples with monic
                                  denominator.

Contexts operate on *raw payloads* (``add``, ``mul``, ``inv``, ...), which
keeps inner loops free of wrapper objects; ``FieldElement`` is a thin
operator-overloading wrapper for API boundaries.  All payloads are
canonical, so equality of mathematical values is payload equality.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from octad import _ring


class FieldError(ValueError):
    pass


class ContextMismatch(FieldError):
    pass


def _check_odd_prime(p):
    if p == 2:
        raise FieldError("characteristic 2 is not supported")
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise FieldError(f"{p} is not prime")


class FieldContext:
    """Common surface of all field contexts."""

    kind = None
    characteristic = None

    def pow(self, a, e):
        """a^e for a payload a and integer e (negative allowed)."""
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return a == b

    def wrap(self, payload):
        return FieldElement(self, payload)

    def __ne__(self, other):
        return not self.__eq__(other)


class FieldElement:
    """Operator-overloading wrapper around (context, payload)."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        self.ctx = ctx
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ContextMismatch("elements from different fields")
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.div(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.div(v, self.value))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx.__class__), self.value))

    def __bool__(self):
        return not self.ctx.is_zero(self.value)

    def __repr__(self):
        return f"{self.ctx.to_str(self.value)}"


class RationalField(FieldContext):
    """The rational numbers; payloads are Fraction."""

    kind = "rationals"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return Fraction(n)

    def to_str(self, a):
        return str(a)

    def sort_key(self, a):
        return (a.numerator, a.denominator)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "QQ"


class FiniteField(FieldContext):
    """Mixin surface shared by PrimeField and ExtensionField."""

    p = None
    degree = None

    @property
    def order(self):
        return self.p ** self.degree

    def is_square(self, a):
        """Quadratic-residue test for nonzero a (True for a = 0)."""
        if self.is_zero(a):
            return True
        return self.pow(a, (self.order - 1) // 2) == self.one

    def nonzero_elements(self):
        for a in self.elements():
            if not self.is_zero(a):
                yield a


class PrimeField(FiniteField):
    """F_p for an odd prime p; payloads are ints in [0, p)."""

    kind = "prime"
    degree = 1

    def __init__(self, p):
        _check_odd_prime(p)
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n % self.p

    def frobenius(self, a):
        return a

    def elements(self):
        return range(self.p)

    def to_str(self, a):
        return str(a)

    def sort_key(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class ExtensionField(FiniteField):
    """F_{p^d} = F_p[z]/(m) for a monic irreducible m of degree d >= 2.

    Payloads are tuples of exactly d ints (coefficients of 1, z, ...,
    z^{d-1}); the modulus is a tuple of d+1 ints, constant first.
    Use ``extension_field(p, d)`` for the canonical modulus.
    """

    kind = "extension"

    def __init__(self, p, modulus):
        _check_odd_prime(p)
        if len(modulus) < 3 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree >= 2")
        self.p = p
        self.characteristic = p
        self.base = PrimeField(p)
        self.modulus = tuple(c % p for c in modulus[:-1]) + (1,)
        self.degree = len(modulus) - 1
        d = self.degree
        self.zero = (0,) * d
        self.one = (1,) + (0,) * (d - 1)
        self.gen = (0, 1) + (0,) * (d - 2)
        # x^(d+j) mod m for j = 0..d-2, as fixed-length rows.
        red = []
        row = [(-c) % p for c in self.modulus[:-1]]  # x^d mod m
        red.append(tuple(row))
        for _ in range(d - 2):
            top = row[-1]
            row = [0] + row[:-1]
            if top:
                for i in range(d):
                    row[i] = (row[i] - top * self.modulus[i]) % p
            red.append(tuple(row))
        self._red = red
        self._frob_cols = None

    def _fix(self, c):
        """Pad a trimmed tuple to payload length d."""
        return tuple(c) + (0,) * (self.degree - len(c))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, d = self.p, self.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = [c % p for c in prod[:d]]
        for j in range(d - 1):
            c = prod[d + j] % p
            if c:
                row = self._red[j]
                for i in range(d):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError(f"division by zero in {self!r}")
        at = _ring.trim(self.base, a)
        g, u, _ = _ring.xgcd(self.base, at, self.modulus)
        if _ring.deg(g) != 0:
            raise FieldError("modulus is not irreducible")
        return self._fix(u)

    def is_zero(self, a):
        return not any(a)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.degree - 1)

    def from_base(self, a):
        """Embed an F_p payload."""
        return self.from_int(a)

    def lift_to_base(self, a):
        """Inverse of from_base; raises if a is not in F_p."""
        if any(a[1:]):
            raise FieldError("element is not in the prime field")
        return a[0]

    def frobenius(self, a):
        """a^p, via the cached Frobenius matrix."""
        if self._frob_cols is None:
            xp = self.pow(self.gen, self.p)
            col, cols = self.one, [self.one]
            for _ in range(self.degree - 1):
                col = self.mul(col, xp)
                cols.append(col)
            self._frob_cols = cols
        p, d = self.p, self.degree
        out = [0] * d
        for i, c in enumerate(a):
            if c:
                col = self._frob_cols[i]
                for k in range(d):
                    out[k] = (out[k] + c * col[k]) % p
        return tuple(out)

    def frobenius_iter(self, a, k):
        """a^(p^k)."""
        for _ in range(k % self.degree):
            a = self.frobenius(a)
        return a

    def trace(self, a):
        """Trace to F_p, returned as an int."""
        acc, b = a, a
        for _ in range(self.degree - 1):
            b = self.frobenius(b)
            acc = self.add(acc, b)
        return self.lift_to_base(acc)

    def norm(self, a):
        """Norm to F_p, returned as an int."""
        n = self.pow(a, (self.order - 1) // (self.p - 1))
        return self.lift_to_base(n)

    def in_subfield(self, a, e):
        """True iff a lies in the subfield F_{p^e} (e | degree)."""
        return self.frobenius_iter(a, e) == a

    def elements(self):
        p, d = self.p, self.degree
        for combo in itertools.product(range(p), repeat=d):
            yield combo

    def to_str(self, a):
        terms = []
        for i in range(self.degree - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "z" if i == 1 else f"z^{i}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return "+".join(terms) if terms else "0"

    def sort_key(self, a):
        return tuple(reversed(a))

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("extension", self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"


def _is_irreducible(base, m):
    """Irreducibility of a monic m over F_p via the Frobenius criterion."""
    d = _ring.deg(m)
    if d == 1:
        return True
    p = base.p
    x = _ring.x_poly(base)
    if _ring.pow_mod(base, x, p**d, m) != x:
        return False
    k = d
    for r in range(2, d + 1):
        if k % r == 0:
            xe = _ring.pow_mod(base, x, p ** (d // r), m)
            if _ring.deg(_ring.gcd(base, _ring.sub(base, xe, x), m)) > 0:
                return False
            while k % r == 0:
                k //= r
    return True


_canonical_modulus_cache = {}


def canonical_modulus(p, d):
    """First monic irreducible of degree d over F_p in graded-lex scan
    order (constant coefficient varying fastest)."""
    key = (p, d)
    if key not in _canonical_modulus_cache:
        base = PrimeField(p)
        for n in range(p**d):
            coeffs = []
            k = n
            for _ in range(d):
                coeffs.append(k % p)
                k //= p
            m = tuple(coeffs) + (1,)
            if _is_irreducible(base, _ring.trim(base, m)):
                _canonical_modulus_cache[key] = m
                break
        else:  # pragma: no cover - cannot happen
            raise FieldError("no irreducible polynomial found")
    return _canonical_modulus_cache[key]


def extension_field(p, d):
    """F_{p^d} with the canonical (first-in-scan-order) modulus.

    For d = 1 this is F_p itself.
    """
    _check_odd_prime(p)
    if d < 1:
        raise FieldError("extension degree must be >= 1")
    if d == 1:
        return PrimeField(p)
    return ExtensionField(p, canonical_modulus(p, d))


class FunctionField(FieldContext):
    """The rational function field F_p(t) for odd p.

    Payloads are pairs (num, den) of coefficient tuples over F_p in
    canonical form: gcd(num, den) = 1, den monic, zero is ((), (1,)).
    """

    kind = "function"

    def __init__(self, p, var="t"):
        _check_odd_prime(p)
        self.p = p
        self.characteristic = p
        self.var = var
        self.base = PrimeField(p)
        self.zero = ((), (1,))
        self.one = ((1,), (1,))

    def normalize(self, num, den):
        b = self.base
        num = _ring.trim(b, num)
        den = _ring.trim(b, den)
        if not den:
            raise ZeroDivisionError(f"division by zero in GF({self.p})({self.var})")
        if not num:
            return self.zero
        g = _ring.gcd(b, num, den)
        if _ring.deg(g) > 0:
            num = _ring.divmod_(b, num, g)[0]
            den = _ring.divmod_(b, den, g)[0]
        lead = b.inv(den[-1])
        if lead != 1:
            num = _ring.scal(b, num, lead)
            den = _ring.scal(b, den, lead)
        return (num, den)

    def from_poly(self, coeffs):
        """Payload for a polynomial in t given int coefficients."""
        b = self.base
        return self.normalize(tuple(c % self.p for c in coeffs), (1,))

    def add(self, a, b):
        f = self.base
        n = _ring.add(
            f, _ring.mul(f, a[0], b[1]), _ring.mul(f, b[0], a[1])
        )
        return self.normalize(n, _ring.mul(f, a[1], b[1]))

    def neg(self, a):
        return (_ring.neg(self.base, a[0]), a[1])

    def mul(self, a, b):
        f = self.base
        return self.normalize(
            _ring.mul(f, a[0], b[0]), _ring.mul(f, a[1], b[1])
        )

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError(f"division by zero in GF({self.p})({self.var})")
        return self.normalize(a[1], a[0])

    def is_zero(self, a):
        return not a[0]

    def from_int(self, n):
        n %= self.p
        return (((n,), (1,)) if n else self.zero)

    def is_polynomial(self, a):
        return a[1] == (1,)

    def evaluate(self, a, x, target):
        """Evaluate at t = x, a payload of the finite field ``target``.

        Raises ZeroDivisionError when the denominator vanishes at x.
        """
        num = _ring.evaluate(target, tuple(target.from_int(c) for c in a[0]), x)
        den = _ring.evaluate(target, tuple(target.from_int(c) for c in a[1]), x)
        return target.div(num, den)

    def to_str(self, a):
        num = _poly_str(a[0], self.var)
        if a[1] == (1,):
            return num
        return f"({num})/({_poly_str(a[1], self.var)})"

    def sort_key(self, a):
        return (a[0], a[1])

    def __eq__(self, other):
        return (
            isinstance(other, FunctionField)
            and other.p == self.p
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("function", self.p, self.var))

    def __repr__(self):
        return f"GF({self.p})({self.var})"


def _poly_str(coeffs, var):
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(var if c == 1 else f"{c}*{var}")
        else:
            terms.append(f"{var}^{i}" if c == 1 else f"{c}*{var}^{i}")
    return "+".join(terms)
