"""Hot numeric kernels: batched determinants mod p, batched determinants
in Zech-logarithm representation (for evaluate-and-interpolate work over
F_p(t)), and term evaluation for projective smoothness scans.

Each kernel exists twice: a numba @njit version and a vectorized numpy
version.  The numpy path is selected when numba is unavailable or when
the environment variable OCTAD_PURE_NUMPY=1 is set; both paths are exact
integer computations and must agree bit-for-bit.

Zech representation: a nonzero element of F_q is stored as its discrete
log base a fixed primitive element, an integer in [0, q-1); zero is the
sentinel q-1.  Addition uses the Zech table z[i] = log(1 + g^i).
"""

from __future__ import annotations

import os

import numpy as np

from octad.fields import extension_field

_PURE = os.environ.get("OCTAD_PURE_NUMPY", "") == "1"
if not _PURE:
    try:
        import numba
    except ImportError:
        numba = None
else:
    numba = None

USING_NUMBA = numba is not None


def _factor_int(n):
    """Prime factors of n by trial division (n small)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class ZechLog:
    """Discrete-log tables for F_{p^k} with a deterministic primitive
    element (first one in enumeration order)."""

    def __init__(self, p, k):
        ctx = extension_field(p, k)
        q = p**k
        self.ctx = ctx
        self.q = q
        self.qm1 = q - 1
        self.half = (q - 1) // 2  # log of -1
        primes = _factor_int(q - 1)
        gen = None
        for a in ctx.elements():
            if ctx.is_zero(a):
                continue
            if all(ctx.pow(a, (q - 1) // r) != ctx.one for r in primes):
                gen = a
                break
        self.gen = gen
        exp = [ctx.one]
        for _ in range(q - 2):
            exp.append(ctx.mul(exp[-1], gen))
        self.exp = exp
        self.logd = {e: i for i, e in enumerate(exp)}
        zech = np.empty(q - 1, dtype=np.int64)
        for i in range(q - 1):
            s = ctx.add(ctx.one, exp[i])
            zech[i] = self.qm1 if ctx.is_zero(s) else self.logd[s]
        self.zech = zech

    def log(self, a):
        """Log of a field payload (q-1 for zero)."""
        if self.ctx.is_zero(a):
            return self.qm1
        return self.logd[a]

    def payload(self, l):
        if l == self.qm1:
            return self.ctx.zero
        return self.exp[l]


# ---------------------------------------------------------------------------
# numpy implementations

def _zadd_np(a, b, zech, qm1):
    """Elementwise Zech addition of log arrays."""
    d = (b - a) % qm1
    z = zech[d]
    s = np.where(z == qm1, qm1, (a + z) % qm1)
    return np.where(a == qm1, b, np.where(b == qm1, a, s))


def _det_zech_np(mats, zech, qm1):
    half = qm1 // 2
    m = mats.copy()
    b, n, _ = m.shape
    det = np.zeros(b, dtype=np.int64)
    alive = np.ones(b, dtype=bool)
    idx = np.arange(b)
    for c in range(n):
        nz = m[:, c:, c] != qm1
        alive &= nz.any(axis=1)
        piv = np.where(alive, np.argmax(nz, axis=1), 0)
        det = np.where(alive & (piv > 0), (det + half) % qm1, det)
        prow = m[idx, c + piv, :].copy()
        m[idx, c + piv, :] = m[:, c, :]
        m[:, c, :] = prow
        plead = m[:, c, c]
        det = np.where(alive, (det + plead) % qm1, det)
        if c + 1 < n:
            lead = m[:, c + 1 :, c]
            # row -= (lead/plead) * pivot row, in logs (half = log of -1)
            shift = (lead - plead[:, None] + half) % qm1
            term = (shift[:, :, None] + prow[:, None, c:]) % qm1
            term = np.where(
                (lead == qm1)[:, :, None] | (prow[:, None, c:] == qm1), qm1, term
            )
            m[:, c + 1 :, c:] = _zadd_np(m[:, c + 1 :, c:], term, zech, qm1)
    return np.where(alive, det, qm1)


def _det_mod_p_np(mats, p):
    m = mats.copy() % p
    b, n, _ = m.shape
    det = np.ones(b, dtype=np.int64)
    idx = np.arange(b)
    for c in range(n):
        nz = m[:, c:, c] != 0
        alive = nz.any(axis=1)
        det = np.where(alive, det, 0)
        piv = np.where(alive, np.argmax(nz, axis=1), 0)
        det = np.where(piv > 0, (-det) % p, det)
        prow = m[idx, c + piv, :].copy()
        m[idx, c + piv, :] = m[:, c, :]
        m[:, c, :] = prow
        plead = m[:, c, c]
        det = (det * plead) % p
        if c + 1 < n:
            inv = np.array([pow(int(v), p - 2, p) if v else 0 for v in plead],
                           dtype=np.int64)
            fac = (m[:, c + 1 :, c] * inv[:, None]) % p
            m[:, c + 1 :, c:] = (
                m[:, c + 1 :, c:] - fac[:, :, None] * prow[:, None, c:]
            ) % p
    return det


def _eval_terms_np(l1, l2, l3, exps, clogs, zech, qm1):
    acc = np.full(l1.shape, qm1, dtype=np.int64)
    coords = (l1, l2, l3)
    for t in range(exps.shape[0]):
        tl = np.full(l1.shape, clogs[t], dtype=np.int64)
        dead = np.zeros(l1.shape, dtype=bool)
        for j in range(3):
            e = exps[t, j]
            if e:
                dead |= coords[j] == qm1
                tl = (tl + e * coords[j]) % qm1
        tl = np.where(dead | (clogs[t] == qm1), qm1, tl)
        acc = _zadd_np(acc, tl, zech, qm1)
    return acc


# ---------------------------------------------------------------------------
# numba implementations

if USING_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _zadd1(a, b, zech, qm1):
        if a == qm1:
            return b
        if b == qm1:
            return a
        z = zech[(b - a) % qm1]
        if z == qm1:
            return qm1
        return (a + z) % qm1

    @njit(cache=True)
    def _det_zech_nb(mats, zech, qm1):
        half = qm1 // 2
        b, n, _ = mats.shape
        out = np.empty(b, dtype=np.int64)
        for k in range(b):
            m = mats[k].copy()
            det = 0
            dead = False
            for c in range(n):
                piv = -1
                for r in range(c, n):
                    if m[r, c] != qm1:
                        piv = r
                        break
                if piv < 0:
                    dead = True
                    break
                if piv != c:
                    for j in range(n):
                        m[c, j], m[piv, j] = m[piv, j], m[c, j]
                    det = (det + half) % qm1
                plead = m[c, c]
                det = (det + plead) % qm1
                for r in range(c + 1, n):
                    lead = m[r, c]
                    if lead == qm1:
                        continue
                    shift = (lead - plead + half) % qm1
                    for j in range(c, n):
                        pj = m[c, j]
                        if pj == qm1:
                            continue
                        m[r, j] = _zadd1(m[r, j], (shift + pj) % qm1, zech, qm1)
            out[k] = qm1 if dead else det
        return out

    @njit(cache=True)
    def _det_mod_p_nb(mats, p):
        b, n, _ = mats.shape
        out = np.empty(b, dtype=np.int64)
        for k in range(b):
            m = mats[k] % p
            det = 1
            for c in range(n):
                piv = -1
                for r in range(c, n):
                    if m[r, c] != 0:
                        piv = r
                        break
                if piv < 0:
                    det = 0
                    break
                if piv != c:
                    for j in range(n):
                        m[c, j], m[piv, j] = m[piv, j], m[c, j]
                    det = (p - det) % p
                plead = m[c, c]
                det = (det * plead) % p
                # inverse of plead via Fermat
                inv = 1
                base = plead
                e = p - 2
                while e:
                    if e & 1:
                        inv = (inv * base) % p
                    base = (base * base) % p
                    e >>= 1
                for r in range(c + 1, n):
                    if m[r, c] == 0:
                        continue
                    fac = (m[r, c] * inv) % p
                    for j in range(c, n):
                        m[r, j] = (m[r, j] - fac * m[c, j]) % p
            out[k] = det
        return out

    @njit(cache=True)
    def _eval_terms_nb(l1, l2, l3, exps, clogs, zech, qm1):
        npts = l1.shape[0]
        nt = exps.shape[0]
        out = np.full(npts, qm1, dtype=np.int64)
        for i in range(npts):
            acc = qm1
            for t in range(nt):
                if clogs[t] == qm1:
                    continue
                tl = clogs[t]
                dead = False
                for j in range(3):
                    e = exps[t, j]
                    if e:
                        lj = l1[i] if j == 0 else (l2[i] if j == 1 else l3[i])
                        if lj == qm1:
                            dead = True
                            break
                        tl = (tl + e * lj) % qm1
                if not dead:
                    acc = _zadd1(acc, tl, zech, qm1)
            out[i] = acc
        return out


def det_zech_batch(mats, zech, qm1):
    """Determinant logs of a batch of matrices in Zech representation."""
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    if USING_NUMBA:
        return _det_zech_nb(mats, zech, qm1)
    return _det_zech_np(mats, zech, qm1)


def det_mod_p_batch(mats, p):
    """Determinants of a batch of integer matrices mod an odd prime p."""
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    if USING_NUMBA:
        return _det_mod_p_nb(mats, p)
    return _det_mod_p_np(mats, p)


def eval_terms_batch(l1, l2, l3, exps, clogs, zech, qm1):
    """Evaluate a trivariate term list at many points, all in Zech logs."""
    l1 = np.ascontiguousarray(l1, dtype=np.int64)
    l2 = np.ascontiguousarray(l2, dtype=np.int64)
    l3 = np.ascontiguousarray(l3, dtype=np.int64)
    exps = np.ascontiguousarray(exps, dtype=np.int64)
    clogs = np.ascontiguousarray(clogs, dtype=np.int64)
    if USING_NUMBA:
        return _eval_terms_nb(l1, l2, l3, exps, clogs, zech, qm1)
    return _eval_terms_np(l1, l2, l3, exps, clogs, zech, qm1)
