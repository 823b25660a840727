"""Timing comparison of the numba kernels against the pure-numpy path.

Run with `python benchmarks/bench_kernels.py`.  The same workloads are
pushed through both implementations; results must agree exactly (they
are verified here) and the table reports wall time per call.

Setting OCTAD_PURE_NUMPY=1 changes the library-wide dispatch; this
script times both families directly so one run covers both.
"""

import time

import numpy as np

from octad import _kernels as K

REPEATS = 3


def _time(fn, *args):
    best = float("inf")
    out = None
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return out, best


def bench_det_mod_p():
    rng = np.random.default_rng(1)
    mats = rng.integers(0, 9973, size=(64, 70, 70), dtype=np.int64)
    rows = []
    ref, t_np = _time(K._det_mod_p_np, mats.copy(), 9973)
    rows.append(("numpy", t_np))
    if K.USING_NUMBA:
        got, t_nb = _time(K._det_mod_p_nb, mats.copy(), 9973)
        assert np.array_equal(ref, got)
        rows.append(("numba", t_nb))
    return "det_mod_p_batch 64x(70x70), p=9973", rows


def bench_det_zech():
    z = K.ZechLog(3, 7)  # GF(2187)
    rng = np.random.default_rng(2)
    mats = rng.integers(0, z.qm1 + 1, size=(64, 70, 70), dtype=np.int64)
    rows = []
    ref, t_np = _time(K._det_zech_np, mats.copy(), z.zech, z.qm1)
    rows.append(("numpy", t_np))
    if K.USING_NUMBA:
        got, t_nb = _time(K._det_zech_nb, mats.copy(), z.zech, z.qm1)
        assert np.array_equal(ref, got)
        rows.append(("numba", t_nb))
    return "det_zech_batch 64x(70x70) over GF(3^7)", rows


def bench_eval_terms():
    z = K.ZechLog(5, 4)  # GF(625)
    rng = np.random.default_rng(3)
    n = 200_000
    logs = [rng.integers(0, z.qm1 + 1, size=n, dtype=np.int64)
            for _ in range(3)]
    exps = np.array([[4 - i - j, i, j]
                     for i in range(5) for j in range(5 - i)],
                    dtype=np.int64)
    clogs = rng.integers(0, z.qm1, size=len(exps), dtype=np.int64)
    rows = []
    ref, t_np = _time(K._eval_terms_np, *logs, exps, clogs, z.zech, z.qm1)
    rows.append(("numpy", t_np))
    if K.USING_NUMBA:
        got, t_nb = _time(K._eval_terms_nb, *logs, exps, clogs,
                          z.zech, z.qm1)
        assert np.array_equal(ref, got)
        rows.append(("numba", t_nb))
    return f"eval_terms_batch {n} points, 15 terms, GF(5^4)", rows


def main():
    print(f"numba available: {K.USING_NUMBA}")
    for bench in (bench_det_mod_p, bench_det_zech, bench_eval_terms):
        title, rows = bench()
        print(f"\n{title}")
        base = rows[0][1]
        for name, t in rows:
            speedup = base / t
            print(f"  {name:>6}: {t * 1e3:8.2f} ms   ({speedup:.1f}x)")


if __name__ == "__main__":
    main()
