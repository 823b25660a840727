"""Polynomial factorization over finite fields, root finding and
subfield embeddings.

The factorization pipeline is the classical squarefree split, then
distinct-degree split, then equal-degree (Cantor-Zassenhaus) split.  The
equal-degree stage draws from a deterministically seeded pseudorandom
stream so repeated runs produce identical output; on top of that, factor
lists are sorted canonically (degree, then coefficient sort keys), so
the output order does not depend on the stream at all.

Everything is generic over the finite field context (prime field or
extension field); the spec-facing ``factor_prime_field`` additionally
insists on a prime-field context.
"""

from __future__ import annotations

import random

from octad.fields import ExtensionField, FieldError, FiniteField, PrimeField
from octad.poly import UniPoly

#: Seed of the equal-degree splitting stream; recorded in CLI metadata.
DEFAULT_SEED = 1


def _require_finite(ctx):
    if not isinstance(ctx, FiniteField):
        raise FieldError("operation requires a finite field context")


def pth_root(f):
    """Coefficientwise p-th root of f(T) = g(T^p); f must have that shape."""
    ctx = f.ctx
    p = ctx.characteristic
    out = []
    for i in range(0, f.degree + 1, p):
        for j in range(1, p):
            if i + j <= f.degree and not ctx.is_zero(f.coeff(i + j)):
                raise ValueError("polynomial is not a p-th power composition")
        c = f.coeff(i)
        # inverse Frobenius: c^(p^(d-1))
        if isinstance(ctx, ExtensionField):
            for _ in range(ctx.degree - 1):
                c = ctx.frobenius(c)
        out.append(c)
    return UniPoly(ctx, out)


def squarefree_decomposition(f):
    """Monic squarefree decomposition [(g_i, m_i)] with f = lc * prod g_i^m_i."""
    _require_finite(f.ctx)
    if f.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    parts = []
    d = f.derivative()
    if d.is_zero():
        root = pth_root(f)
        return [(g, m * f.ctx.characteristic) for g, m in squarefree_decomposition(root)]
    c = f.gcd(d)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            parts.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        root = pth_root(c)
        parts.extend((g, m * f.ctx.characteristic) for g, m in squarefree_decomposition(root))
    return parts


def distinct_degree_decomposition(f):
    """Split a monic squarefree f into [(product of irreducibles of degree d, d)]."""
    _require_finite(f.ctx)
    q = f.ctx.order
    x = UniPoly.x(f.ctx)
    h = x % f
    g = f
    out = []
    d = 0
    while g.degree > 0:
        d += 1
        if 2 * d > g.degree:
            out.append((g, g.degree))
            break
        h = h.pow_mod(q, g)
        gd = g.gcd(h - x)
        if gd.degree > 0:
            out.append((gd, d))
            g = g // gd
            h = h % g
    return out


def _random_poly(ctx, degree_bound, rng):
    """Random nonconstant polynomial of degree < degree_bound (>= 2)."""
    p = ctx.characteristic
    while True:
        if isinstance(ctx, ExtensionField):
            coeffs = [
                tuple(rng.randrange(p) for _ in range(ctx.degree))
                for _ in range(degree_bound)
            ]
        else:
            coeffs = [rng.randrange(p) for _ in range(degree_bound)]
        a = UniPoly(ctx, coeffs)
        if a.degree >= 1:
            return a


def equal_degree_split(f, d, rng):
    """Irreducible factors of a monic squarefree f all of whose factors
    have degree d (Cantor-Zassenhaus)."""
    ctx = f.ctx
    if f.degree == d:
        return [f]
    e = (ctx.order**d - 1) // 2
    one = UniPoly.one(ctx)
    while True:
        a = _random_poly(ctx, f.degree, rng)
        g = a.gcd(f)
        if 0 < g.degree < f.degree:
            pieces = (g, f // g)
        else:
            b = a.pow_mod(e, f)
            g = (b - one).gcd(f)
            if not 0 < g.degree < f.degree:
                continue
            pieces = (g, f // g)
        out = []
        for piece in pieces:
            out.extend(equal_degree_split(piece, d, rng))
        return out


def poly_sort_key(g):
    """Canonical ordering: by degree, then coefficient keys, constant last."""
    ctx = g.ctx
    return (g.degree, tuple(ctx.sort_key(c) for c in reversed(g.coeffs)))


def factor(f, seed=DEFAULT_SEED):
    """Factor a nonzero f over its finite field into monic irreducibles.

    Returns [(g, multiplicity)] sorted by (degree, coefficients); the
    product of g^m times f's leading coefficient re-expands to f.
    """
    _require_finite(f.ctx)
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for part, mult in squarefree_decomposition(f):
        for prod, d in distinct_degree_decomposition(part):
            for g in equal_degree_split(prod, d, rng):
                out.append((g, mult))
    out.sort(key=lambda gm: poly_sort_key(gm[0]))
    return out


def factor_prime_field(f, seed=DEFAULT_SEED):
    """Spec surface: factorization over a prime field F_p, p odd."""
    if not isinstance(f.ctx, PrimeField):
        raise FieldError("factor_prime_field requires a prime-field context")
    return factor(f, seed=seed)


def is_irreducible(f):
    """Irreducibility over a finite field (f nonconstant)."""
    _require_finite(f.ctx)
    if f.degree < 1:
        return False
    fs = factor(f)
    return len(fs) == 1 and fs[0][1] == 1 and fs[0][0].degree == f.degree


def roots_in_field(f, seed=DEFAULT_SEED):
    """All roots of f lying in its own coefficient field, sorted."""
    ctx = f.ctx
    _require_finite(ctx)
    roots = [
        ctx.neg(g.coeff(0))
        for g, _ in factor(f, seed=seed)
        if g.degree == 1
    ]
    roots.sort(key=ctx.sort_key)
    return roots


def one_root(g, sub_order, rng, max_fast_tries=64):
    """One root in K of a monic squarefree g in K[T], all of whose roots
    lie in the subfield of K with ``sub_order`` elements.

    Splits with prime-field-coefficient test polynomials raised to
    (sub_order - 1)/2, which keeps the exponent at subfield size; falls
    back to plain Cantor-Zassenhaus over K if the small sample space is
    exhausted without progress.
    """
    ctx = g.ctx
    one = UniPoly.one(ctx)
    e_fast = (sub_order - 1) // 2
    e_full = (ctx.order - 1) // 2
    h = g
    tries = 0
    while h.degree > 1:
        tries += 1
        exponent = e_fast if tries <= max_fast_tries else e_full
        a = _random_poly(ctx, h.degree, rng)
        s = a.gcd(h)
        if not 0 < s.degree < h.degree:
            b = a.pow_mod(exponent, h)
            s = (b - one).gcd(h)
            if not 0 < s.degree < h.degree:
                continue
        h = s if s.degree <= h.degree - s.degree else h // s
    return ctx.neg(h.coeff(0))


def frobenius_orbit(ctx, root, steps, length):
    """[root, root^(p^steps), root^(p^2*steps), ...] of the given length."""
    orbit = [root]
    cur = root
    for _ in range(length - 1):
        cur = ctx.frobenius_iter(cur, steps) if isinstance(ctx, ExtensionField) else cur
        orbit.append(cur)
    return orbit


class Embedding:
    """A field embedding small -> big between finite fields over the same
    prime, realized by a chosen root of the small field's modulus.

    ``apply`` maps payloads forward; ``section`` maps payloads of the
    image back (raising FieldError outside the image).
    """

    def __init__(self, src, dst, gen_image):
        self.src = src
        self.dst = dst
        self.gen_image = gen_image
        self._solver = None

    def apply(self, a):
        if isinstance(self.src, PrimeField):
            return self.dst.from_int(a)
        acc = self.dst.zero
        for c in reversed(a):
            acc = self.dst.add(self.dst.mul(acc, self.gen_image), self.dst.from_int(c))
        return acc

    def map_poly(self, f):
        return f.map_coeffs(self.dst, self.apply)

    def _build_solver(self):
        # columns: images of the src basis 1, g, g^2, ... as F_p-vectors
        src_deg = 1 if isinstance(self.src, PrimeField) else self.src.degree
        cols = []
        cur = self.dst.one
        for _ in range(src_deg):
            cols.append(cur)
            cur = self.dst.mul(cur, self.gen_image)
        p = self.dst.p
        n = self.dst.degree
        rows = [[cols[j][i] for j in range(src_deg)] for i in range(n)]
        self._solver = (rows, src_deg, p)

    def section(self, b):
        """Express b in terms of the src basis; b must lie in the image."""
        if isinstance(self.src, PrimeField):
            return b if isinstance(self.dst, PrimeField) else self.dst.lift_to_base(b)
        if self._solver is None:
            self._build_solver()
        rows, m, p = self._solver
        # gaussian solve of rows * x = b over F_p
        aug = [list(r) + [bi] for r, bi in zip(rows, b)]
        n = len(aug)
        piv_cols = []
        r = 0
        for c in range(m):
            piv = next((i for i in range(r, n) if aug[i][c] % p), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = pow(aug[r][c], p - 2, p)
            aug[r] = [(v * inv) % p for v in aug[r]]
            for i in range(n):
                if i != r and aug[i][c] % p:
                    fac = aug[i][c]
                    aug[i] = [(v - fac * w) % p for v, w in zip(aug[i], aug[r])]
            piv_cols.append(c)
            r += 1
        x = [0] * m
        for i, c in enumerate(piv_cols):
            x[c] = aug[i][m]
        for i in range(r, n):
            if aug[i][m] % p:
                raise FieldError("element is not in the embedded subfield")
        # verify (the system can be inconsistent only via free columns)
        if self.apply(tuple(x)) != b:
            raise FieldError("element is not in the embedded subfield")
        return tuple(x)


_embedding_cache = {}


def embed(src, dst, seed=DEFAULT_SEED):
    """Canonical embedding of one finite field into a larger one (same p,
    src degree dividing dst degree).  The root of the src modulus is the
    sort-key-minimal one, so the embedding is deterministic."""
    key = (src, dst)
    if key in _embedding_cache:
        return _embedding_cache[key]
    if src.p != dst.p:
        raise FieldError("incompatible characteristics")
    src_deg = 1 if isinstance(src, PrimeField) else src.degree
    dst_deg = 1 if isinstance(dst, PrimeField) else dst.degree
    if dst_deg % src_deg:
        raise FieldError("no embedding: source degree does not divide target degree")
    if isinstance(src, PrimeField):
        emb = Embedding(src, dst, None)
    elif src == dst:
        emb = Embedding(src, dst, src.gen)
    else:
        m = UniPoly(dst, [dst.from_int(c) for c in src.modulus])
        rng = random.Random(seed)
        r = one_root(m, src.order, rng)
        orbit = {r}
        cur = r
        for _ in range(src_deg - 1):
            cur = dst.frobenius(cur)
            orbit.add(cur)
        emb = Embedding(src, dst, min(orbit, key=dst.sort_key))
    _embedding_cache[key] = emb
    return emb
