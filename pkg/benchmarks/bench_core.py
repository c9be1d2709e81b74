#!/usr/bin/env python3
"""Benchmark the pure-Python kernel against the compiled one.

Primitive operations are timed in-process on both implementations; the
end-to-end row (the degree-12 lift construction) runs in subprocesses so
the kernel selection in refl4.kernel is exercised for real.

Usage: python benchmarks/bench_core.py [--quick]
"""

import argparse
import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import refl4._corepy as pure

try:
    import refl4._corecy as comp
except ImportError:
    comp = None


def rand_fe(rng, size=30):
    return pure.fe_canon(
        rng.randint(1, size), [rng.randint(-size, size) for _ in range(16)]
    )


def rand_praw(rng, deg, nterms):
    out = {}
    for _ in range(nterms):
        exps = tuple(rng.randint(0, deg) for _ in range(4))
        fe = rand_fe(rng)
        if not pure.fe_is_zero(fe):
            out[exps] = fe
    return out


def bench(label, fn_pure, fn_comp, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn_pure()
    t_pure = time.perf_counter() - t0
    if comp is None:
        print(f"{label:30s} pure {t_pure:8.3f}s   compiled unavailable")
        return
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn_comp()
    t_comp = time.perf_counter() - t0
    speedup = t_pure / t_comp if t_comp else float("inf")
    print(
        f"{label:30s} pure {t_pure:8.3f}s   compiled {t_comp:8.3f}s   x{speedup:.1f}"
    )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    scale = 1 if args.quick else 4

    rng = random.Random(2026)
    fes = [rand_fe(rng) for _ in range(2000)]
    pairs = [(fes[i], fes[(i * 7 + 1) % len(fes)]) for i in range(len(fes))]

    def run_mul(impl):
        for a, b in pairs:
            impl.fe_mul(a, b)

    def run_add(impl):
        for a, b in pairs:
            impl.fe_add(a, b)

    bench("fe_mul x2000", lambda: run_mul(pure), lambda: run_mul(comp), 5 * scale)
    bench("fe_add x2000", lambda: run_add(pure), lambda: run_add(comp), 5 * scale)

    p = rand_praw(rng, 4, 40)
    q = rand_praw(rng, 4, 40)
    bench(
        "praw_mul 40x40 terms",
        lambda: pure.praw_mul(p, q),
        lambda: comp.praw_mul(p, q),
        3 * scale,
    )

    dense = {}
    for e0 in range(0, 13):
        for e1 in range(0, 13 - e0):
            for e2 in range(0, 13 - e0 - e1):
                dense[(e0, e1, e2, 12 - e0 - e1 - e2)] = rand_fe(rng, 9)
    ma = tuple(rand_fe(rng, 5) for _ in range(4))
    mb = tuple(rand_fe(rng, 5) for _ in range(4))
    bench(
        "pair substitution deg 12",
        lambda: pure.praw_pair_subst(dense, (0, 1), ma, (2, 3), mb),
        lambda: comp.praw_pair_subst(dense, (0, 1), ma, (2, 3), mb),
        scale,
    )

    mats = [tuple(rand_fe(rng, 6) for _ in range(16)) for _ in range(40)]

    def run_mat(impl):
        acc = mats[0]
        for m in mats[1:]:
            acc = impl.mat4_mul(acc, m)
        return acc

    bench("mat4_mul chain x40", lambda: run_mat(pure), lambda: run_mat(comp), 5 * scale)

    # end to end through the real kernel selection
    script = (
        "import time, sys; sys.path.insert(0, 'src'); t0=time.time(); "
        "from refl4 import geometry; geometry.invariant_by_lift('Gamma12'); "
        "print('%.2f' % (time.time()-t0))"
    )
    here = os.path.join(os.path.dirname(__file__), "..")
    t_comp = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, cwd=here,
        env={**os.environ, "REFL4_PURE": ""},
    ).stdout.strip()
    t_pure = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, cwd=here,
        env={**os.environ, "REFL4_PURE": "1"},
    ).stdout.strip()
    if t_pure and t_comp:
        print(
            f"{'degree-12 lift end-to-end':30s} pure {float(t_pure):8.3f}s   "
            f"compiled {float(t_comp):8.3f}s   x{float(t_pure)/float(t_comp):.1f}"
        )


if __name__ == "__main__":
    main()
