"""First-order dominance of mixing measures, majorization of spectra, and pruning.

Both relations are checked at breakpoints only: measure cdfs are piecewise
constant and spectral tail integrals piecewise linear, so the breakpoints are
exhaustive. Comparisons carry a one-sided slack of 1e-12.
"""
from __future__ import annotations

from typing import Callable, Sequence, TypeVar

from .riskcore import KusuokaSet
from .transform import NORM_TOL, SpectralStep, UnitMeasure, _require_normalized

DOMINANCE_TOL = 1e-12

T = TypeVar("T")


def fo_dominates(mu1: UnitMeasure, mu2: UnitMeasure, tol: float = DOMINANCE_TOL) -> bool:
    """True iff ``mu1`` is dominated by ``mu2`` in first order (cdf of mu1 >= cdf of mu2)."""
    points = sorted(set(mu1.alphas) | set(mu2.alphas))
    return all(mu1.cdf(x) >= mu2.cdf(x) - tol for x in points)


def majorizes(sigma1: SpectralStep, sigma2: SpectralStep, tol: float = DOMINANCE_TOL) -> bool:
    """True iff ``sigma1`` is majorized by ``sigma2``: tail integrals of sigma1 never exceed sigma2's."""
    _require_normalized(sigma1, NORM_TOL)
    _require_normalized(sigma2, NORM_TOL)
    points = sorted(set(sigma1.froms) | set(sigma2.froms))
    return all(sigma1.tail_integral(g) <= sigma2.tail_integral(g) + tol for g in points)


def _prune(items: Sequence[T], below: Callable[[T, T], bool]) -> list[T]:
    # Drop i if some j != i sits above it. Mutually comparable pairs (equal up
    # to the slack) are one class: only the earliest member survives.
    n = len(items)
    keep = []
    for i in range(n):
        dominated = False
        for j in range(n):
            if i == j or not below(items[i], items[j]):
                continue
            if below(items[j], items[i]) and j > i:
                continue
            dominated = True
            break
        if not dominated:
            keep.append(items[i])
    return keep


def prune_measures(M: KusuokaSet) -> KusuokaSet:
    """Keep the members not strictly dominated in first order by another member."""
    return KusuokaSet(tuple(_prune(M.members, fo_dominates)))


def prune_spectral(spectra: Sequence[SpectralStep]) -> list[SpectralStep]:
    """Drop every spectrum majorized by another one in the list."""
    for s in spectra:
        _require_normalized(s, NORM_TOL)
    return _prune(list(spectra), majorizes)


def downward_closure_member(mu: UnitMeasure, shift: Sequence[float]) -> UnitMeasure:
    """A measure dominated by ``mu``: each atom moved left by the matching ``shift`` (clipped at 0)."""
    pairs = [(max(0.0, a - s), c) for a, c, s in zip(mu.alphas, mu.masses, shift)]
    return UnitMeasure.from_pairs(pairs)
