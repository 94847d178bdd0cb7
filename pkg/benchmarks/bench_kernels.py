#!/usr/bin/env python3
"""Benchmark the numba kernels against their numpy fallbacks.

Runs each sweep kernel on the largest in-scope dimensions, with a warmup
call so numba's compile time is reported separately from steady-state
throughput.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from mublab import _kernels_numpy
from mublab.arithmetic import build_context, factor_prime_power
from mublab.mub import mub_family
from mublab.pauli import build_phase_system

try:
    from mublab import _kernels_numba

    BACKENDS = {"numpy": _kernels_numpy, "numba": _kernels_numba}
except ImportError:
    print("numba unavailable; benchmarking the numpy path only")
    BACKENDS = {"numpy": _kernels_numpy}


def _time(fn, *args, repeat: int) -> tuple[float, float]:
    t0 = time.perf_counter()
    fn(*args)
    first = time.perf_counter() - t0
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return first, best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    cases = []
    for dim, mode in ((16, "galois"), (21, "modular")):
        if mode == "galois":
            p, m = factor_prime_power(dim)
            ctx = build_context("galois", p, m)
        else:
            ctx = build_context("modular", dim)
        phases = build_phase_system(ctx)
        family = mub_family(ctx, phases)
        rng = np.random.default_rng(0)
        tuples = rng.integers(0, dim, size=(200_000, 4), dtype=np.int64)
        bases = np.ascontiguousarray(family.bases)
        states = rng.normal(size=(dim * dim, dim * dim)) + 1j * rng.normal(size=(dim * dim, dim * dim))
        product = rng.normal(size=(dim + 1, dim, dim * dim)) + 1j * rng.normal(size=(dim + 1, dim, dim * dim))
        cases.append(
            (
                f"N={dim} {mode}",
                ctx,
                {
                    "composition_residual": (ctx.add, ctx.mul, ctx.neg, ctx.chi, tuples),
                    "unbiased_extremes": (bases,),
                    "overlap_tensor": (states.conj(), product),
                    "eigenbasis_residual": (
                        np.ascontiguousarray(family.bases[1]),
                        0,
                        ctx.add,
                        ctx.mul,
                        ctx.neg,
                        ctx.chi,
                        np.ascontiguousarray(phases.phi[1]),
                    ),
                },
            )
        )

    print(f"{'case':<14} {'kernel':<22} {'backend':<7} {'first (s)':>10} {'best (s)':>10}")
    for label, _, kernel_args in cases:
        for kernel, kargs in kernel_args.items():
            rows = {}
            for name, impl in BACKENDS.items():
                first, best = _time(getattr(impl, kernel), *kargs, repeat=args.repeat)
                rows[name] = (first, best)
                print(f"{label:<14} {kernel:<22} {name:<7} {first:>10.4f} {best:>10.4f}")
            if len(rows) == 2:
                speedup = rows["numpy"][1] / rows["numba"][1]
                print(f"{label:<14} {kernel:<22} {'':<7} {'speedup':>10} {speedup:>9.2f}x")


if __name__ == "__main__":
    main()
