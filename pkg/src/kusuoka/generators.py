"""Seeded random instances for self-checks, tests and benchmarks."""
from __future__ import annotations

import numpy as np

from .distribution import DiscreteDistribution, build
from .transform import SpectralStep, UnitMeasure


def random_distribution(rng: np.random.Generator, n_min: int = 2, n_max: int = 50, scale: float = 1.0) -> DiscreteDistribution:
    n = int(rng.integers(n_min, n_max + 1))
    values = rng.normal(0.0, scale, n)
    probs = rng.dirichlet(np.ones(n))
    probs = np.maximum(probs, 1e-6)
    probs /= probs.sum()
    return build(zip(values.tolist(), probs.tolist()))


def random_equal_prob(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    """Atom values of an equal-probability variable (kept in scenario order)."""
    return rng.normal(0.0, scale, n)


def random_measure(rng: np.random.Generator, max_atoms: int = 20, alpha_max: float = 0.95) -> UnitMeasure:
    k = int(rng.integers(1, max_atoms + 1))
    alphas = np.unique(rng.uniform(0.0, alpha_max, k))
    if rng.random() < 0.3:
        alphas = np.unique(np.concatenate([[0.0], alphas]))
    masses = rng.dirichlet(np.ones(len(alphas)))
    masses = np.maximum(masses, 1e-6)
    masses /= masses.sum()
    return UnitMeasure.from_pairs(zip(alphas.tolist(), masses.tolist()), normalize=True)


def random_spectral(rng: np.random.Generator, max_pieces: int = 20, from_max: float = 0.95, grid: int | None = None) -> SpectralStep:
    """Normalized step spectrum; with ``grid`` the breakpoints are multiples of ``1/grid``."""
    k = int(rng.integers(1, max_pieces + 1))
    if grid is None:
        cuts = np.unique(rng.uniform(0.0, from_max, k - 1))
    else:
        cuts = np.unique(rng.integers(1, grid, k - 1)) / grid
    froms = np.concatenate([[0.0], cuts])
    incs = rng.exponential(1.0, len(froms))
    if len(froms) > 1 and rng.random() < 0.3:
        incs[0] = 0.0
    levels = np.cumsum(incs)
    widths = np.diff(np.concatenate([froms, [1.0]]))
    levels = levels / float(np.dot(widths, levels))
    return SpectralStep.from_pieces(zip(froms.tolist(), levels.tolist()))


def dominated_by(rng: np.random.Generator, mu: UnitMeasure) -> UnitMeasure:
    """A measure first-order dominated by ``mu``: atoms moved left by random amounts."""
    pairs = [(a * rng.uniform(0.0, 1.0) if rng.random() < 0.7 else a, c) for a, c in mu.pairs()]
    return UnitMeasure.from_pairs(pairs, normalize=True)


def dominating(rng: np.random.Generator, mu: UnitMeasure, alpha_max: float = 0.97) -> UnitMeasure:
    """A measure first-order dominating ``mu``: atoms moved right by random amounts."""
    pairs = [(a + max(0.0, alpha_max - a) * rng.uniform(0.0, 1.0) if rng.random() < 0.7 else a, c) for a, c in mu.pairs()]
    return UnitMeasure.from_pairs(pairs, normalize=True)
