"""Benchmark the compiled kernels against the pure-Python twins.

Two views:

  * kernel microbenchmarks run in-process on both kernel modules;
  * end-to-end engine workloads run in subprocesses with QWEYL_BACKEND
    forced, since the backend binds at import time.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import time
from fractions import Fraction

BIAS = (1 << 19) << 40


def random_poly(rng, terms):
    out = {}
    while len(out) < terms:
        key = (
            (rng.randrange(6) << 60)
            | ((rng.randrange(-8, 60) + (1 << 19)) << 40)
            | (rng.randrange(3) << 20)
            | rng.randrange(3)
        )
        out[key] = rng.randrange(-99, 100) or 1
    return out


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_bench(repeat):
    from qweyl import _kernels_py as kpy

    try:
        from qweyl import _kernels_cy as kcy
    except ImportError:
        print("compiled kernels not built; kernel comparison skipped")
        return

    rng = random.Random(0)
    sizes = [(30, 30), (120, 120), (400, 400)]
    print("%-28s %12s %12s %8s" % ("kernel workload", "python", "cython", "speedup"))
    for na, nb in sizes:
        a, b = random_poly(rng, na), random_poly(rng, nb)
        tp = time_call(lambda: kpy.mpoly_mul(a, b, BIAS), repeat)
        tc = time_call(lambda: kcy.mpoly_mul(a, b, BIAS), repeat)
        print("%-28s %10.3fms %10.3fms %7.2fx" % ("mul %dx%d terms" % (na, nb), tp * 1e3, tc * 1e3, tp / tc))
    a, b = random_poly(rng, 600), random_poly(rng, 600)
    tp = time_call(lambda: kpy.mpoly_add(a, b), repeat)
    tc = time_call(lambda: kcy.mpoly_add(a, b), repeat)
    print("%-28s %10.3fms %10.3fms %7.2fx" % ("add 600+600 terms", tp * 1e3, tc * 1e3, tp / tc))
    frac_a = {k: Fraction(v, 7) for k, v in a.items()}
    tp = time_call(lambda: kpy.mpoly_scale(frac_a, Fraction(3, 2)), repeat)
    tc = time_call(lambda: kcy.mpoly_scale(frac_a, Fraction(3, 2)), repeat)
    print("%-28s %10.3fms %10.3fms %7.2fx" % ("scale 600 Fraction terms", tp * 1e3, tc * 1e3, tp / tc))


ENGINE_SNIPPETS = {
    "product commutator (3,3|2)": (
        "from qweyl.identities import IdentityCase, verify\n"
        "from qweyl.weyl import hq\n"
        "assert verify(IdentityCase('COR2b', hq(), ns=(3, 3), ms=(3, 3), k=2)).passed\n"
    ),
    "block commutator (4,4|2)": (
        "from qweyl.identities import IdentityCase, verify\n"
        "from qweyl.weyl import hq\n"
        "assert verify(IdentityCase('COR2a', hq(), n=4, m=4, k=2)).passed\n"
    ),
    "ladder triple n=12": (
        "from qweyl.identities import IdentityCase, verify\n"
        "from qweyl.weyl import hq\n"
        "rel = hq()\n"
        "for variant in ('as_stated', 'p_scaled'):\n"
        "    verify(IdentityCase('THM5', rel, n=12, variant=variant))\n"
    ),
    "product collapse n=16": (
        "from qweyl.identities import IdentityCase, verify\n"
        "from qweyl.weyl import hq\n"
        "assert verify(IdentityCase('THM1a', hq(), n=16)).passed\n"
    ),
}


def _run_snippet(snippet, backend, repeat):
    env = dict(os.environ, QWEYL_BACKEND=backend)
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        r = subprocess.run([sys.executable, "-c", snippet], env=env, capture_output=True, text=True)
        if r.returncode != 0:
            return None, r.stderr.strip().splitlines()[-1] if r.stderr.strip() else "failed"
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), None


def engine_bench(repeat):
    print()
    print("%-28s %12s %12s %8s" % ("engine workload (net)", "python", "cython", "speedup"))
    # interpreter + import baseline, subtracted from every row
    baseline = {}
    for backend in ("python", "cython"):
        t, err = _run_snippet("import qweyl.identities", backend, repeat)
        if t is None:
            print("  %s backend unavailable (%s)" % (backend, err))
            return
        baseline[backend] = t
    for label, snippet in ENGINE_SNIPPETS.items():
        times = {}
        for backend in ("python", "cython"):
            t, err = _run_snippet(snippet, backend, repeat)
            if t is None:
                print("  %s backend unavailable (%s)" % (backend, err))
                return
            times[backend] = max(t - baseline[backend], 1e-9)
        tp, tc = times["python"], times["cython"]
        print("%-28s %10.3fms %10.3fms %7.2fx" % (label, tp * 1e3, tc * 1e3, tp / tc))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    kernel_bench(args.repeat)
    engine_bench(args.repeat)


if __name__ == "__main__":
    main()
