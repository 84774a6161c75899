"""Finitely supported distributions, their right-side quantile and partial moments."""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import GammaOutOfRange, InvalidP, NonpositiveProb, ProbSumOutOfTolerance, TauOutOfRange

#: accepted deviation of the input probability total from 1
PROB_SUM_TOL = 1e-9


@dataclass(frozen=True)
class StepQuantile:
    """Right-continuous step form of a quantile function.

    ``values[k]`` applies on ``[taus[k], taus[k+1])``; the last step runs to 1.
    """

    taus: tuple[float, ...]
    values: tuple[float, ...]

    def widths(self) -> list[float]:
        ends = list(self.taus[1:]) + [1.0]
        return [b - a for a, b in zip(self.taus, ends)]

    def integral(self, power: float = 1.0) -> float:
        """``int_0^1 F^{-1}(t)^power dt`` summed piece by piece."""
        return math.fsum(w * v**power for w, v in zip(self.widths(), self.values))


@dataclass(frozen=True, eq=True)
class DiscreteDistribution:
    """Sorted atoms of a finitely supported random variable.

    Build instances with :func:`build`; the constructor assumes canonical input.
    """

    values: tuple[float, ...]
    probs: tuple[float, ...]
    cum: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @cached_property
    def mean(self) -> float:
        return math.fsum(v * p for v, p in zip(self.values, self.probs))

    @cached_property
    def values_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    @cached_property
    def probs_array(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=float)

    @cached_property
    def quantile_from_array(self) -> np.ndarray:
        return np.asarray((0.0,) + self.cum[:-1], dtype=float)

    def cdf(self, x: float) -> float:
        k = bisect_right(self.values, x)
        return 0.0 if k == 0 else self.cum[k - 1]

    def pairs(self) -> list[tuple[float, float]]:
        return list(zip(self.values, self.probs))


def build(pairs: Iterable[tuple[float, float]]) -> DiscreteDistribution:
    """Validate ``(value, prob)`` pairs and return the canonical distribution.

    Pairs are sorted by value, duplicate values merged, and the probabilities
    renormalized to sum to one.
    """
    items = [(float(v), float(p)) for v, p in pairs]
    if not items:
        raise ProbSumOutOfTolerance("no atoms given")
    for v, p in items:
        if not p > 0.0:
            raise NonpositiveProb(f"probability {p!r} at value {v!r} is not positive")
        if not math.isfinite(v) or not math.isfinite(p):
            raise NonpositiveProb(f"non-finite atom ({v!r}, {p!r})")
    total = math.fsum(p for _, p in items)
    if abs(total - 1.0) > PROB_SUM_TOL:
        raise ProbSumOutOfTolerance(f"probabilities sum to {total!r}")

    # sort by (value, prob) and use fsum so permuted input gives identical output
    items.sort()
    values: list[float] = []
    groups: list[list[float]] = []
    for v, p in items:
        if values and values[-1] == v:
            groups[-1].append(p)
        else:
            values.append(v)
            groups.append([p])
    probs = [math.fsum(g) / total for g in groups]
    cum = np.cumsum(probs).tolist()
    cum[-1] = 1.0
    for k in range(len(cum) - 1):
        if not cum[k] < cum[k + 1]:
            raise NonpositiveProb("probability too small to resolve in cumulative sum")
    return DiscreteDistribution(tuple(values), tuple(probs), tuple(cum))


def from_samples(samples: Sequence[float]) -> DiscreteDistribution:
    """Equal-weight empirical distribution, 1/n per sample."""
    n = len(samples)
    if n == 0:
        raise ProbSumOutOfTolerance("no samples given")
    return build((x, 1.0 / n) for x in samples)


def dirac(value: float) -> DiscreteDistribution:
    return build([(value, 1.0)])


def step_quantile(d: DiscreteDistribution) -> StepQuantile:
    return StepQuantile((0.0,) + d.cum[:-1], d.values)


def quantile(d: DiscreteDistribution, tau: float) -> float:
    """Right-side quantile ``sup{t : F(t) <= tau}``."""
    if not 0.0 <= tau < 1.0:
        raise TauOutOfRange(f"tau={tau!r} not in [0, 1)")
    return d.values[bisect_right(d.cum, tau)]


def tail_integral(d: DiscreteDistribution, gamma: float) -> float:
    """``int_gamma^1 F^{-1}(tau) dtau``, exact over the quantile steps."""
    if not 0.0 <= gamma <= 1.0:
        raise GammaOutOfRange(f"gamma={gamma!r} not in [0, 1]")
    k = bisect_right(d.cum, gamma)
    if k >= d.n:
        return 0.0
    terms = [d.values[k] * (d.cum[k] - gamma)]
    terms.extend(v * p for v, p in zip(d.values[k + 1 :], d.probs[k + 1 :]))
    return math.fsum(terms)


def positive_part_norm(d: DiscreteDistribution, t: float, p: float) -> float:
    """``||(Z - t)_+||_p`` over the atoms."""
    if not p >= 1.0 or math.isinf(p):
        raise InvalidP(f"p={p!r} must be finite and >= 1")
    m = kernels.partial_moment(d.values_array, d.probs_array, float(t), float(p))
    if m <= 0.0:
        return 0.0
    return m if p == 1.0 else m ** (1.0 / p)
