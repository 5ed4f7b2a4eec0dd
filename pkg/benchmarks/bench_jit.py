"""Compare the numba kernels with the plain-numpy fallback.

Each mode runs in its own interpreter because the switch is read at import
time (``SBUNDLE_DISABLE_JIT=1`` selects the fallback).  The JIT run is
warmed up first so compile time is reported separately.

    python benchmarks/bench_jit.py [--repeat 3] [--quick]
"""
import argparse
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import json, sys, time
import numpy as np
from sbundle import JIT_ENABLED, SolverConfig, solve
from sbundle.bounds import PUB, bound_of_set
from sbundle.connectivity import induced_bundle_status
from sbundle.generators import c_fat, gnp, hamming

quick, repeat = json.loads(sys.argv[1])
cases = [("c-fat200-1 s=2", c_fat(200, 1), 2), ("hamming6-4 s=2", hamming(6, 4), 2)]
if not quick:
    cases.append(("gnp(40, 0.5) s=3", gnp(40, 0.5, seed=3), 3))

def timed(fn):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out

t0 = time.perf_counter()
solve(c_fat(50, 1), SolverConfig(s=2))  # triggers compilation (or cache load)
rows = {"jit": JIT_ENABLED, "warmup": time.perf_counter() - t0}
g = hamming(6, 4)
verts = np.arange(g.n, dtype=np.int64)
rows["partition bound x200"] = timed(lambda: [bound_of_set(g.indptr, g.indices, verts, 4, PUB) for _ in range(200)])[0]
rows["s-bundle test x1"] = timed(lambda: [induced_bundle_status(g.indptr, g.indices, verts, 50) for _ in range(1)])[0]
for name, h, s in cases:
    sec, r = timed(lambda: solve(h, SolverConfig(s=s)))
    rows[name] = sec
    rows[name + " size"] = r.best_size
print(json.dumps(rows))
"""


def run(disable: bool, quick: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env["SBUNDLE_DISABLE_JIT"] = "1" if disable else "0"
    out = subprocess.run([sys.executable, "-c", WORKER, json.dumps([quick, repeat])],
                         env=env, check=True, capture_output=True, text=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slowest case")
    args = ap.parse_args()

    jit = run(False, args.quick, args.repeat)
    ref = run(True, args.quick, args.repeat)
    if not jit["jit"]:
        print("numba unavailable: both runs used the fallback")
    print(f"warm-up (compile or cache load): jit {jit['warmup']:.2f} s, fallback {ref['warmup']:.2f} s")
    print(f"{'workload':<24}{'numba [s]':>12}{'fallback [s]':>14}{'speedup':>10}")
    for key in jit:
        if key in ("jit", "warmup") or key.endswith(" size"):
            continue
        a, b = jit[key], ref[key]
        print(f"{key:<24}{a:>12.4f}{b:>14.4f}{b / a:>9.1f}x")
        if key + " size" in jit and jit[key + " size"] != ref[key + " size"]:
            print(f"  MISMATCH: {jit[key + ' size']} vs {ref[key + ' size']}")
    return 0


if __name__ == "__main__":
    t = time.perf_counter()
    rc = main()
    print(f"total {time.perf_counter() - t:.1f} s")
    sys.exit(rc)
