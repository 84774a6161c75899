"""Time the compiled kernels against the pure-Python fallback.

Usage::

    python benchmarks/bench_kernels.py [--repeat 5] [--quick]

Prints one row per kernel: best-of-``repeat`` wall time for each backend and
the speedup. Both backends are imported directly, so the environment switch
that selects the runtime backend has no effect here.
"""
from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from kusuoka import _pykernels

try:
    from kusuoka import _ckernels
except ImportError:
    _ckernels = None


def cases(rng: np.random.Generator, quick: bool):
    n_atoms = 200 if quick else 2000
    grid = 10**5 if quick else 10**6
    values = np.sort(rng.normal(size=n_atoms))
    probs = rng.dirichlet(np.ones(n_atoms))
    q_from = np.concatenate([[0.0], np.cumsum(probs)[:-1]])
    k = 500 if quick else 5000
    s_from = np.concatenate([[0.0], np.sort(rng.uniform(0, 1, k - 1))])
    s_level = np.cumsum(rng.exponential(1.0, k))
    targets = np.sort(rng.uniform(0, 1, 2**12))
    others = rng.uniform(0, 1, 16 if quick else 20)
    return {
        "step_product_integral": lambda m: m.step_product_integral(s_from, s_level, q_from, values),
        "partial_moment": lambda m: [m.partial_moment(values, probs, t, 2.5) for t in values[::10]],
        "riemann_midpoint": lambda m: m.riemann_midpoint(s_from, s_level, q_from, values, grid),
        "grid_phi_min(p=2)": lambda m: m.grid_phi_min(values[:50], probs[:50], 2.0, 2.0, -3.0, 3.0, grid // 10),
        "grid_phi_min(p=2.5)": lambda m: m.grid_phi_min(values[:50], probs[:50], 2.0, 2.5, -3.0, 3.0, grid // 10),
        "subset_sum_collision": lambda m: m.subset_sum_collision(targets, others, 1e-15),
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--quick", action="store_true", help="smaller inputs")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is available", file=sys.stderr)

    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<24}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, fn in cases(rng, args.quick).items():
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<24}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        t_c = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<24}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
