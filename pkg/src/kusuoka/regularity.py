"""Subset-sum condition for the existence of a nonregular risk measure on a finite space.

Let ``K`` be the atoms whose probability equals ``p_hat``. When no nonempty
subset of ``K`` has the same total probability as a nonempty subset of the
other atoms, the average over ``K`` is law invariant yet has no Kusuoka
representation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import NonpositiveProb, PHatNotPresent, ProbSumOutOfTolerance, TooManyAtoms

MAX_ATOMS = 24
SUM_TOL = 1e-12

HOLDS = "condition-holds"
FAILS = "condition-fails"
EQUAL_PROBABILITIES = "equal-probabilities"


@dataclass(frozen=True)
class AtomicSpace:
    probs: tuple[float, ...]
    p_hat: float

    def __post_init__(self):
        object.__setattr__(self, "probs", tuple(float(p) for p in self.probs))
        if not self.probs:
            raise ProbSumOutOfTolerance("no atoms")
        if any(not 0.0 < p <= 1.0 for p in self.probs):
            raise NonpositiveProb("probabilities must lie in (0, 1]")
        if abs(math.fsum(self.probs) - 1.0) > SUM_TOL:
            raise ProbSumOutOfTolerance(f"probabilities sum to {math.fsum(self.probs)!r}")
        if not any(abs(p - self.p_hat) <= SUM_TOL for p in self.probs):
            raise PHatNotPresent(f"p_hat={self.p_hat!r} is not one of the probabilities")


@dataclass(frozen=True)
class NonregularityVerdict:
    """Outcome of :func:`nonregularity_condition`; truthy when the condition holds."""

    holds: bool
    status: str
    k: int

    def __bool__(self) -> bool:
        return self.holds


def _subset_sums(values: Sequence[float]) -> np.ndarray:
    sums = np.zeros(1)
    for v in values:
        sums = np.concatenate([sums, sums + v])
    return sums[1:]


def nonregularity_condition(space: AtomicSpace) -> NonregularityVerdict:
    """Check that subset sums over ``K`` and over its complement never coincide.

    Only pairs of nonempty subsets are compared. With an empty complement (all
    probabilities equal) the condition holds vacuously and the verdict carries
    the ``equal-probabilities`` status: every risk measure is regular there.
    """
    n = len(space.probs)
    if n > MAX_ATOMS:
        raise TooManyAtoms(f"{n} atoms exceeds the enumeration limit of {MAX_ATOMS}")
    inside = [p for p in space.probs if abs(p - space.p_hat) <= SUM_TOL]
    outside = [p for p in space.probs if abs(p - space.p_hat) > SUM_TOL]
    if not outside:
        return NonregularityVerdict(True, EQUAL_PROBABILITIES, len(inside))
    # enumerate the smaller family into a sorted table, search the other
    if len(inside) <= len(outside):
        table, search = inside, outside
    else:
        table, search = outside, inside
    targets = np.sort(_subset_sums(table))
    hit = kernels.subset_sum_collision(targets, np.asarray(search, dtype=float), SUM_TOL)
    return NonregularityVerdict(not hit, FAILS if hit else HOLDS, len(inside))
