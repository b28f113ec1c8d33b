"""Benchmark: compiled term-arithmetic kernel vs the pure-Python fallback.

The kernel is chosen at import time, so each configuration runs in a fresh
subprocess (CYCDAHA_PURE_PYTHON=1 forces the fallback).  Two workloads:

* mul   -- repeated sparse Laurent-polynomial products;
* sweep -- a DAHA relation box sweep (the dominant acceptance workload).

Run:  python3 benchmarks/bench_kernel.py
"""

import json
import os
import subprocess
import sys

SNIPPET = r"""
import json, time
from fractions import Fraction
from random import Random

from cycdaha.kernel import IMPLEMENTATION
from cycdaha.laurent import LaurentPoly
from cycdaha.scalars import QQ

rng = Random(42)

def random_poly(N, terms, span):
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(-span, span) for _ in range(N))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if c:
            out[e] = c
    return LaurentPoly(N, QQ, out)

# workload 1: products
polys = [random_poly(3, 24, 6) for _ in range(40)]
t0 = time.perf_counter()
acc = 0
for i in range(len(polys)):
    for j in range(i + 1, len(polys)):
        acc += len((polys[i] * polys[j]).terms)
mul_seconds = time.perf_counter() - t0

# workload 2: relation box sweep
from cycdaha.algebra import sample_rep, verify_family
t0 = time.perf_counter()
rep = sample_rep("daha", 3, seed=1)
ok = verify_family(rep, "daha", "box", box_radius=3)["all_pass"]
sweep_seconds = time.perf_counter() - t0

print(json.dumps({
    "kernel": IMPLEMENTATION,
    "mul_seconds": round(mul_seconds, 3),
    "sweep_seconds": round(sweep_seconds, 3),
    "sweep_ok": ok,
    "checksum": acc,
}))
"""


def run(pure):
    env = dict(os.environ)
    if pure:
        env["CYCDAHA_PURE_PYTHON"] = "1"
    else:
        env.pop("CYCDAHA_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, "-c", SNIPPET], env=env, capture_output=True, text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    results = [run(pure=False), run(pure=True)]
    if results[0]["checksum"] != results[1]["checksum"]:
        raise SystemExit("kernels disagree!")
    print(f"{'kernel':<10} {'mul (s)':>10} {'relation sweep (s)':>20}")
    for r in results:
        print(f"{r['kernel']:<10} {r['mul_seconds']:>10} {r['sweep_seconds']:>20}")
    if results[0]["kernel"] == results[1]["kernel"]:
        print("note: compiled kernel unavailable; both rows ran pure Python")
    else:
        mul_speedup = results[1]["mul_seconds"] / results[0]["mul_seconds"]
        sweep_speedup = results[1]["sweep_seconds"] / results[0]["sweep_seconds"]
        print(f"speedup: mul x{mul_speedup:.2f}, sweep x{sweep_speedup:.2f}")


if __name__ == "__main__":
    main()
