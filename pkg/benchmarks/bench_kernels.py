"""Compare the compiled and pure-Python kernels.

Runs each kernel on the same inputs through both implementations, checks the
outputs agree, and prints the median time of several repetitions::

    python benchmarks/bench_kernels.py [--repeat 5]

A second section times a full Hilbert-basis computation end to end, once per
backend, by re-running this script in a subprocess with ``NMI_PURE_PYTHON``.
"""

import argparse
import os
import statistics
import subprocess
import sys
import time

import numpy as np

from nmi import _kernels_py
from nmi.polyhedral import det_adj

try:
    from nmi import _kernels
except ImportError:  # pragma: no cover - extension not built
    _kernels = None


def _time(fn, repeat):
    samples = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        samples.append(time.perf_counter() - t)
    return statistics.median(samples), out


def _span_case(rng, d, target):
    """Generators of the parallelepiped group of a random simplicial cone with ``|det| >= target``."""
    while True:
        M = rng.integers(0, 4, size=(d, d)).tolist()
        det, adj = det_adj(M)
        if abs(det) >= target:
            break
    D = abs(det)
    s = 1 if det > 0 else -1
    return [[(s * adj[i][k]) % D for i in range(d)] for k in range(d)], D


def _mask_case(rng, n, k):
    H = rng.integers(0, 12, size=(n, k)).astype(np.int64)
    H = np.unique(H, axis=0)
    return H[np.argsort(H.sum(axis=1), kind="stable")]


def kernel_section(repeat):
    rng = np.random.default_rng(20240501)
    small, large = _span_case(rng, 6, 200), _span_case(rng, 9, 20000)
    cases = [
        (f"cyclic_span d=6 D={small[1]}", lambda m: m.cyclic_span(*small)),
        (f"cyclic_span d=9 D={large[1]}", lambda m: m.cyclic_span(*large)),
        ("minimal_mask 2000x12", lambda m, H=_mask_case(rng, 2000, 12): m.minimal_mask(H)),
        ("minimal_mask 8000x20", lambda m, H=_mask_case(rng, 8000, 20): m.minimal_mask(H)),
    ]
    print(f"{'kernel':28s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for name, run in cases:
        tp, outp = _time(lambda: run(_kernels_py), repeat)
        if _kernels is None:
            print(f"{name:28s} {tp:11.4f} {'n/a':>11s} {'n/a':>8s}")
            continue
        tc, outc = _time(lambda: run(_kernels), repeat)
        if name.startswith("cyclic_span"):
            same = {r.tobytes() for r in np.asarray(outp)} == {r.tobytes() for r in np.asarray(outc)}
        else:
            same = np.array_equal(np.asarray(outp), np.asarray(outc))
        if not same:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:28s} {tp:11.4f} {tc:11.4f} {tp / tc:8.1f}x")


END_TO_END = """
import time
from nmi import kernels
from nmi.combinatorics import graph, cover_ideal
from nmi.cone import normality_via_rees
edges = [(1,2),(2,3),(3,4),(4,5),(5,6),(6,7),(7,8),(8,9),(9,10),(1,10),(2,11),(8,11),(3,12),(7,12),
         (1,9),(2,8),(3,7),(4,6),(1,6),(4,9),(5,10),(10,11),(11,12),(5,12)]
I = cover_ideal(graph(12, edges))
t = time.perf_counter()
rep = normality_via_rees(I)
print(kernels.BACKEND, f"{time.perf_counter() - t:.3f}", rep.normal, len(rep.hb.minimal_hb))
"""


def end_to_end_section():
    print("\nend to end: Rees-cone Hilbert basis of a 16-generator ideal of covers")
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("NMI_PURE_PYTHON", None)
        if pure:
            env["NMI_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
        backend, secs, normal, size = out.stdout.split()
        print(f"  {backend:7s} {secs:>8s} s   normal={normal} hilbert_basis={size}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()
    kernel_section(args.repeat)
    if not args.skip_end_to_end:
        end_to_end_section()


if __name__ == "__main__":
    main()
