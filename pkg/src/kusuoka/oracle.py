"""Brute-force grid evaluators used to cross-check the exact piecewise algebra.

Nothing here calls into ``riskcore``, ``families`` or ``dominance``; the grids
read the raw atoms and pieces directly.
"""
from __future__ import annotations

import math

import numpy as np

from . import kernels
from .distribution import DiscreteDistribution
from .transform import SpectralStep

GRID_MAJOR_SLACK = 1e-9


def riemann_spectral(d: DiscreteDistribution, sigma: SpectralStep, n: int) -> float:
    """Midpoint rule for ``int sigma(t) F^{-1}(t) dt`` on ``n`` equal cells.

    The sum is divided by the midpoint mass of ``sigma`` so constants come out
    exact at every ``n``; both sums converge to the same limit.
    """
    if n < 1:
        raise ValueError("n must be positive")
    froms = np.asarray(sigma.froms, dtype=float)
    levels = np.asarray(sigma.levels, dtype=float)
    q_from = np.concatenate([[0.0], np.cumsum(d.probs)[:-1]])
    raw = kernels.riemann_midpoint(froms, levels, q_from, np.asarray(d.values, dtype=float), int(n))
    mass = kernels.riemann_midpoint(froms, levels, np.zeros(1), np.ones(1), int(n))
    # sigma vanishes at every midpoint: nothing to normalize by
    return raw / mass if mass > 0.0 else raw


def variational_bracket(d: DiscreteDistribution, c: float) -> tuple[float, float]:
    zmin, zmax = min(d.values), max(d.values)
    mean = sum(v * p for v, p in zip(d.values, d.probs))
    return min(zmin, (c * mean - zmax) / (c - 1.0)), zmax


def grid_min_variational(d: DiscreteDistribution, c: float, p: float, n: int) -> float:
    """Minimum of ``t + c ||(Z - t)_+||_p`` over ``n`` grid points spanning the minimizer bracket."""
    if n < 100:
        raise ValueError("n must be at least 100")
    lo, hi = variational_bracket(d, c)
    if hi == lo:
        return hi
    return kernels.grid_phi_min(
        np.asarray(d.values, dtype=float), np.asarray(d.probs, dtype=float), float(c), float(p), lo, hi, int(n)
    )


def grid_resolution_bound(d: DiscreteDistribution, c: float, n: int) -> float:
    """Worst-case excess of the grid minimum: Lipschitz constant ``max(1, c - 1)`` times the spacing."""
    lo, hi = variational_bracket(d, c)
    return max(1.0, c - 1.0) * (hi - lo) / (n - 1)


def _tail_on_grid(sigma: SpectralStep, n: int) -> np.ndarray:
    mid = (np.arange(n) + 0.5) / n
    idx = np.searchsorted(np.asarray(sigma.froms), mid, side="right") - 1
    cells = np.asarray(sigma.levels)[idx] / n
    # tails[k] = int_{k/n}^1 sigma, for k = 0..n
    return np.concatenate([np.cumsum(cells[::-1])[::-1], [0.0]])


def grid_majorizes(sigma1: SpectralStep, sigma2: SpectralStep, n: int) -> bool:
    """Tail-integral comparison on the grid ``k/n`` with slack 1e-9.

    Exact when every breakpoint of both inputs lies on the grid.
    """
    if n < 100:
        raise ValueError("n must be at least 100")
    t1 = _tail_on_grid(sigma1, n)
    t2 = _tail_on_grid(sigma2, n)
    if not math.isclose(t1[0], t2[0], abs_tol=GRID_MAJOR_SLACK):
        return False
    return bool(np.all(t1 <= t2 + GRID_MAJOR_SLACK))
