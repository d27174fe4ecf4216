"""Compare the compiled oracle kernels with their pure-Python fallback.

Usage::

    python benchmarks/bench_kernels.py [--repeat 3]

The fallback is the same function body run by the interpreter (the
``py_func`` of each numba dispatcher), which is exactly what
``PARITYCYCLES_DISABLE_JIT=1`` executes.  Both sides must agree before a
timing is printed.
"""

from __future__ import annotations

import argparse
import time

from paritycycles import kernels
from paritycycles._jit import JIT_ENABLED
from paritycycles.graph import complete_bipartite, complete_graph, petersen_graph


def count_case(g, v):
    csr = kernels.to_csr(g)
    return lambda fn: tuple(fn(*csr, v, v, -1, 3))


def odd_trail_case(g, e):
    # bipartite input: no odd closed trail exists, so the search is exhaustive
    csr = kernels.to_csr(g)
    u, w = g.endpoints(e)
    return lambda fn: int(fn(*csr, g.m, w, u, e, 1, 1))


CASES = [
    ("K7 cycles through a vertex", count_case(complete_graph(7), 0), "simple_path_counts"),
    ("K8 cycles through a vertex", count_case(complete_graph(8), 0), "simple_path_counts"),
    ("Petersen cycles through a vertex", count_case(petersen_graph(), 0), "simple_path_counts"),
    ("K3,4 odd trail search (none)", odd_trail_case(complete_bipartite(3, 4), 0), "closed_trail_search"),
    ("K3,5 odd trail search (none)", odd_trail_case(complete_bipartite(3, 5), 0), "closed_trail_search"),
]


def best_of(call, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = call()
        best = min(best, time.perf_counter() - t)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description="compiled vs pure-Python oracle kernels")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not JIT_ENABLED:
        raise SystemExit("JIT is disabled by PARITYCYCLES_DISABLE_JIT; nothing to compare")

    print(f"{'case':34} {'jit ms':>10} {'python ms':>11} {'speedup':>8}")
    for name, case, kernel in CASES:
        compiled = getattr(kernels, kernel)
        case(compiled)  # compile before timing
        t_jit, r_jit = best_of(lambda: case(compiled), args.repeat)
        t_py, r_py = best_of(lambda: case(compiled.py_func), args.repeat)
        if r_jit != r_py:
            raise SystemExit(f"{name}: compiled and fallback disagree ({r_jit} vs {r_py})")
        print(f"{name:34} {1e3 * t_jit:10.3f} {1e3 * t_py:11.2f} {t_py / max(t_jit, 1e-9):7.0f}x")


if __name__ == "__main__":
    main()
