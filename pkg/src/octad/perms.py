"""Permutation groups: Schreier-Sims stabilizer chains, the induced
action of S8 on 2-subsets, the even-subset symplectic model of Sp6(F2)
on 63 points, coset actions with canonical representatives, and
exhaustive conjugacy search.

Permutations are stored as image tuples (0-indexed); composition is
(a * b)(x) = a(b(x)).
"""

from __future__ import annotations

import itertools


def _compose(a, b):
    return tuple(a[v] for v in b)


def _inverse(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


class Permutation:
    __slots__ = ("img",)

    def __init__(self, img):
        img = tuple(img)
        if sorted(img) != list(range(len(img))):
            raise ValueError("image array is not a bijection")
        self.img = img

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n, cycles):
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    @property
    def degree(self):
        return len(self.img)

    def __call__(self, x):
        return self.img[x]

    def __mul__(self, other):
        return Permutation(_compose(self.img, other.img))

    def inverse(self):
        return Permutation(_inverse(self.img))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def is_identity(self):
        return all(v == i for i, v in enumerate(self.img))

    def cycles(self):
        seen = [False] * len(self.img)
        out = []
        for s in range(len(self.img)):
            if seen[s]:
                continue
            cyc = [s]
            seen[s] = True
            v = self.img[s]
            while v != s:
                seen[v] = True
                cyc.append(v)
                v = self.img[v]
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return sorted(len(c) for c in self.cycles())

    def __repr__(self):
        return f"Permutation({list(self.img)})"


def _orbit_transversal(gens, b, n):
    ident = tuple(range(n))
    t = {b: ident}
    queue = [b]
    for pt in queue:
        for g in gens:
            img = g[pt]
            if img not in t:
                t[img] = _compose(g, t[pt])
                queue.append(img)
    return t


class PermGroup:
    """A permutation group with a lazily built base and strong generating
    set (deterministic Schreier-Sims; base points ascending unless a
    prefix is prescribed)."""

    def __init__(self, degree, generators, base_hint=()):
        self.degree = degree
        gens = []
        for g in generators:
            img = g.img if isinstance(g, Permutation) else tuple(g)
            if len(img) != degree:
                raise ValueError("generator degree mismatch")
            gens.append(img)
        self.generators = [Permutation(g) for g in gens]
        self._raw_gens = gens
        self._hint = tuple(base_hint)
        self._chain = None

    # -- stabilizer chain ---------------------------------------------------

    def _build(self):
        if self._chain is not None:
            return
        n = self.degree
        ident = tuple(range(n))
        base = []
        for b in self._hint:
            if b not in base:
                base.append(b)
        sgens = [g for g in self._raw_gens if g != ident]

        def extend_base(g):
            for b in range(n):
                if b not in base and g[b] != b:
                    base.append(b)
                    return

        for g in sgens:
            if all(g[b] == b for b in base):
                extend_base(g)
        s = [[g for g in sgens if all(g[b] == b for b in base[:i])]
             for i in range(len(base))]
        t = [_orbit_transversal(s[i], base[i], n) for i in range(len(base))]

        def strip(g, start):
            for l in range(start, len(base)):
                img = g[base[l]]
                if img not in t[l]:
                    return g, l
                g = _compose(_inverse(t[l][img]), g)
            return g, len(base)

        i = len(base) - 1
        while i >= 0:
            restart = False
            for pt in list(t[i]):
                for g in s[i]:
                    rep = t[i][pt]
                    sg = _compose(_inverse(t[i][g[pt]]), _compose(g, rep))
                    h, j = strip(sg, i + 1)
                    if h != ident:
                        if all(h[b] == b for b in base):
                            extend_base(h)
                            s.append([])
                            t.append({})
                        for l in range(i + 1, j + 1):
                            s[l].append(h)
                            t[l] = _orbit_transversal(s[l], base[l], n)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1
        self._chain = (base, s, t)

    @property
    def order(self):
        self._build()
        _, _, t = self._chain
        out = 1
        for tr in t:
            out *= len(tr)
        return out

    def contains(self, perm):
        img = perm.img if isinstance(perm, Permutation) else tuple(perm)
        if len(img) != self.degree:
            return False
        self._build()
        base, _, t = self._chain
        g = img
        for l in range(len(base)):
            x = g[base[l]]
            if x not in t[l]:
                return False
            g = _compose(_inverse(t[l][x]), g)
        return all(v == i for i, v in enumerate(g))

    def __contains__(self, perm):
        return self.contains(perm)

    def elements(self):
        """Iterate all elements once (products of transversal reps)."""
        self._build()
        _, _, t = self._chain
        reps = [list(tr.values()) for tr in t]
        if not reps:
            yield Permutation.identity(self.degree)
            return
        for combo in itertools.product(*reps):
            g = combo[0]
            for r in combo[1:]:
                g = _compose(g, r)
            yield Permutation(g)

    def random_element(self, rng):
        self._build()
        _, _, t = self._chain
        g = tuple(range(self.degree))
        for tr in t:
            g = _compose(g, rng.choice(list(tr.values())))
        return Permutation(g)

    def orbit(self, pt):
        return set(_orbit_transversal(self._raw_gens, pt, self.degree))

    def is_transitive(self):
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def stabilizer(self, pt):
        """The stabilizer of a point, as a new group."""
        g = PermGroup(self.degree, self.generators, base_hint=(pt,))
        g._build()
        base, s, _ = g._chain
        if not base or base[0] != pt:
            return g  # nothing moves pt
        gens = s[1] if len(s) > 1 else []
        return PermGroup(self.degree, [Permutation(x) for x in gens] or
                         [Permutation.identity(self.degree)])

    def is_subgroup(self, other):
        """True iff self <= other."""
        return all(other.contains(g) for g in self.generators)


def two_set_action(sigma):
    """The permutation a degree-8 permutation induces on the 28
    2-subsets of {0..7}, indexed lexicographically."""
    if sigma.degree != 8:
        raise ValueError("two_set_action requires degree 8")
    pairs = list(itertools.combinations(range(8), 2))
    index = {p: k for k, p in enumerate(pairs)}
    img = [index[tuple(sorted((sigma(a), sigma(b))))] for a, b in pairs]
    return Permutation(img)


def pair_of_index(k):
    """Inverse of the lexicographic 2-subset indexing."""
    return list(itertools.combinations(range(8), 2))[k]


# ---------------------------------------------------------------------------
# even-subset symplectic model
#
# Vectors of the 6-dimensional space over F2 are even-cardinality subsets
# of {0..7} modulo complementation; the canonical class representative is
# the subset avoiding 7, stored as an 8-bit mask.  The fixed basis is the
# classes of {0,1}, {1,2}, ..., {5,6}; the form is <A,B> = |A and B| mod 2.

_BASIS_MASKS = [0b11 << i for i in range(6)]


def _canonical_mask(mask):
    return mask if not (mask >> 7) & 1 else mask ^ 0xFF


def _build_tables():
    coords_of = {}
    mask_of = [0] * 64
    for v in range(64):
        m = 0
        for i in range(6):
            if (v >> i) & 1:
                m ^= _BASIS_MASKS[i]
        m = _canonical_mask(m)
        coords_of[m] = v
        mask_of[v] = m
    return coords_of, mask_of


_COORDS_OF, _MASK_OF = _build_tables()

#: Gram matrix rows of the form in the fixed basis, as 6-bit masks.
FORM_ROWS = tuple(
    sum(
        (bin(_BASIS_MASKS[i] & _BASIS_MASKS[j]).count("1") % 2) << j
        for j in range(6)
    )
    for i in range(6)
)


def symplectic_form(u, v):
    """<u, v> over F2 for 6-bit coordinate vectors."""
    acc = 0
    for i in range(6):
        if (u >> i) & 1:
            acc ^= bin(FORM_ROWS[i] & v).count("1") % 2
    return acc


def _apply_perm_to_mask(sigma, mask):
    out = 0
    for k in range(8):
        if (mask >> k) & 1:
            out |= 1 << sigma(k)
    return _canonical_mask(out)


def s8_to_sp6(sigma):
    """Matrix (tuple of 6 column vectors, each a 6-bit int) of the action
    of a degree-8 permutation on the even-subset space."""
    if sigma.degree != 8:
        raise ValueError("s8_to_sp6 requires degree 8")
    return tuple(
        _COORDS_OF[_apply_perm_to_mask(sigma, _MASK_OF[1 << i])]
        for i in range(6)
    )


def sp6_apply(matrix, v):
    out = 0
    for i in range(6):
        if (v >> i) & 1:
            out ^= matrix[i]
    return out


def sp6_mul(a, b):
    return tuple(sp6_apply(a, b[i]) for i in range(6))


def matrix_preserves_form(m):
    return all(
        symplectic_form(sp6_apply(m, u), sp6_apply(m, v)) == symplectic_form(u, v)
        for u in range(1, 64)
        for v in range(1, 64)
    )


def _vector_perm(f):
    """Permutation of the 63 nonzero vectors (point v-1 is vector v)."""
    return Permutation([f(v) - 1 for v in range(1, 64)])


def transvection(v):
    """The symplectic transvection x -> x + <x,v> v as a permutation of
    the 63 nonzero vectors."""
    return _vector_perm(lambda x: x ^ (v if symplectic_form(x, v) else 0))


def sp6_group():
    """Sp6(F2) on the 63 nonzero vectors, generated by all transvections."""
    return PermGroup(63, [transvection(v) for v in range(1, 64)])


def s8_in_sp6(sigma):
    """The degree-63 permutation of a degree-8 permutation's symplectic
    image (for embedding S8 into sp6_group)."""
    m = s8_to_sp6(sigma)
    return _vector_perm(lambda x: sp6_apply(m, x))


def s8_image_group():
    """The image of S8 inside sp6_group, on 63 points."""
    gens = [
        Permutation.from_cycles(8, [(0, 1)]),
        Permutation.from_cycles(8, [tuple(range(8))]),
    ]
    return PermGroup(63, [s8_in_sp6(g) for g in gens])


# ---------------------------------------------------------------------------
# coset actions

def canonical_coset_rep(g, h):
    """The representative of the left coset g·H minimizing the image
    tuple of H's base, found greedily down H's stabilizer chain."""
    h._build()
    base, _, t = h._chain
    rep = g.img if isinstance(g, Permutation) else tuple(g)
    for l in range(len(base)):
        best = min(t[l], key=lambda pt: rep[pt])
        rep = _compose(rep, t[l][best])
    return Permutation(rep)


class CosetAction:
    """The action of a group on the left cosets of a subgroup."""

    def __init__(self, gen_images, reps, group):
        self.gen_images = gen_images
        self.reps = reps
        self.group = group


def coset_action(g, h, max_index=10000):
    """Permutation action of G on the left cosets of H <= G."""
    if not all(h.contains(x) for x in h.generators):
        raise ValueError("inconsistent subgroup")
    for x in h.generators:
        if not g.contains(x):
            raise ValueError("H is not a subgroup of G")
    index = g.order // h.order
    if index > max_index:
        raise ValueError("index bound exceeded")
    start = canonical_coset_rep(Permutation.identity(g.degree), h)
    reps = [start]
    lookup = {start.img: 0}
    queue = [start]
    edges = {}
    for rep in queue:
        i = lookup[rep.img]
        for gi, s in enumerate(g.generators):
            new = canonical_coset_rep(s * rep, h)
            if new.img not in lookup:
                lookup[new.img] = len(reps)
                reps.append(new)
                queue.append(new)
            edges[(gi, i)] = lookup[new.img]
    n = len(reps)
    if n != index:
        raise AssertionError("coset enumeration does not match the index")
    gen_images = [
        Permutation([edges[(gi, i)] for i in range(n)])
        for gi in range(len(g.generators))
    ]
    return CosetAction(gen_images, reps, PermGroup(n, gen_images))


def twofold_stabilizer(group, w1, w2):
    """The stabilizer of two distinct points, via two chain steps."""
    if w1 == w2:
        raise ValueError("points must be distinct")
    return group.stabilizer(w1).stabilizer(w2)


def conjugate_in(u1_gens, u2_gens, search_space, max_size=2 * 10**6):
    """An element g of search_space with g U1 g^-1 = U2, or None, by
    exhaustive enumeration through the stabilizer chain."""
    if search_space.order > max_size:
        raise ValueError("search space exceeds the enumeration bound")
    deg = search_space.degree
    u1 = PermGroup(deg, u1_gens)
    u2 = PermGroup(deg, u2_gens)
    if u1.order != u2.order:
        return None
    for g in search_space.elements():
        gi = g.inverse()
        if all(u2.contains(g * x * gi) for x in u1.generators):
            return g
    return None
