#!/usr/bin/env python3
"""Benchmark the compiled Rota-Baxter enumeration kernel against the pure twin.

Both kernels run the identical integer-scaled algorithm; the comparison below
also asserts that they return identical results on every workload.

Usage: python benchmarks/bench_search.py
"""

import time
from fractions import Fraction

from homtwist.catalog import catalog_get
from homtwist.search import HAVE_COMPILED_KERNEL, SearchConfig, search_rb


def _grid(radius: int, half_steps: bool = False):
    values = [Fraction(v) for v in range(-radius, radius + 1)]
    if half_steps:
        values += [Fraction(2 * v + 1, 2) for v in range(-radius, radius)]
    return values


def workloads():
    field2 = catalog_get("unital_field")
    assoc3 = catalog_get("ex_assoc3", {"a": 1, "b": 2})
    zero2 = catalog_get("zero_algebra", dim=2)
    yield "dim 1, 41-point grid, weight 1", field2, SearchConfig(_grid(10, True), weight=1)
    yield "dim 2 zero algebra, 11-point grid", zero2, SearchConfig(_grid(5), weight=1)
    yield "dim 3 catalog algebra, {-1,0,1}", assoc3, SearchConfig([-1, 0, 1], weight=0)
    yield "dim 3 catalog algebra, {-2..2}, weight 1", assoc3, SearchConfig(_grid(2), weight=1)


def run(kernel: str, algebra, cfg):
    start = time.perf_counter()
    result = search_rb(algebra, cfg, kernel=kernel)
    return time.perf_counter() - start, result


def main():
    if not HAVE_COMPILED_KERNEL:
        print("compiled kernel unavailable; timing the pure-Python kernel only")
    header = f"{'workload':<44} {'candidates':>12} {'hits':>6} {'python':>10}"
    if HAVE_COMPILED_KERNEL:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, algebra, cfg in workloads():
        candidates = len(cfg.entry_set) ** (algebra.dim ** 2)
        t_py, res_py = run("python", algebra, cfg)
        line = f"{label:<44} {candidates:>12} {len(res_py):>6} {t_py:>9.3f}s"
        if HAVE_COMPILED_KERNEL:
            t_c, res_c = run("c", algebra, cfg)
            assert res_c == res_py, "kernels disagree"
            line += f" {t_c:>9.3f}s {t_py / t_c:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
