"""Numba vs numpy timings for the clique-count and rank kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends are imported in one process, so the comparison calls the
kernel functions directly rather than flipping ``FLAGCOMB_BACKEND``.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from flagcomb import gen, kernels
from flagcomb._accel import HAVE_NUMBA
from flagcomb.classify import boundary_matrix
from flagcomb.flag import _forward_matrix, one_skeleton


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def clique_cases(quick):
    sizes = (24, 36) if quick else (24, 48, 72)
    for n in sizes:
        g = one_skeleton(gen.j_m_n(3, n))
        yield f"J3({n}) graph", _forward_matrix(g), 7
    rng = np.random.default_rng(0)
    for n, p in ((60, 0.3), (120, 0.15)) if not quick else ((60, 0.3),):
        a = rng.random((n, n)) < p
        yield f"G({n},{p})", np.triu(a | a.T, k=1), n


def rank_cases(quick):
    for n, k in ((14, 3), (18, 3)) if quick else ((14, 3), (18, 3), (21, 3)):
        yield f"d_{k} of J3({n})", boundary_matrix(gen.j_m_n(3, n), k)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args(argv)
    if not HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    # compile once so the timings exclude JIT
    small = _forward_matrix(one_skeleton(gen.cycle(5)))
    kernels.count_cliques_numba(small, 3)
    kernels.rank_gf2_numba(np.eye(3, dtype=np.int64))
    kernels.rank_modp_numba(np.eye(3, dtype=np.int64), 3)

    print(f"{'kernel':<10} {'case':<22} {'shape':>10} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for name, fwd, k in clique_cases(args.quick):
        tn, a = best_of(lambda: kernels.count_cliques_numba(fwd, k), args.repeat)
        tp, b = best_of(lambda: kernels.count_cliques_numpy(fwd, k), args.repeat)
        assert list(a) == list(b), name
        print(f"{'cliques':<10} {name:<22} {fwd.shape[0]:>10} {tn:>10.4f} {tp:>10.4f} {tp / tn:>8.1f}")
    for name, mat in rank_cases(args.quick):
        shape = f"{mat.shape[0]}x{mat.shape[1]}"
        for p in (2, 3):
            if p == 2:
                fn_n = lambda: kernels.rank_gf2_numba(mat % 2)
                fn_p = lambda: kernels.rank_gf2_numpy(mat % 2)
            else:
                fn_n = lambda: kernels.rank_modp_numba(mat, 3)
                fn_p = lambda: kernels.rank_modp_numpy(mat, 3)
            tn, a = best_of(fn_n, args.repeat)
            tp, b = best_of(fn_p, args.repeat)
            assert a == b, (name, p)
            print(f"{f'rank GF{p}':<10} {name:<22} {shape:>10} {tn:>10.4f} {tp:>10.4f} {tp / tn:>8.1f}")


if __name__ == "__main__":
    main()
