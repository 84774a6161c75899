"""Mixing measures on [0, 1), spectral step functions, and the map between them.

A mixing measure ``sum c_i delta_{alpha_i}`` is sent to the spectral function
with a jump of ``c_i / (1 - alpha_i)`` at each ``alpha_i``; the inverse reads
off each jump ``D`` at ``a`` as mass ``(1 - a) * D``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import (
    AlreadyAboveTarget,
    ConvergenceError,
    InvalidMeasure,
    InvalidParams,
    InvalidQ,
    InvalidSpectrum,
    NotNormalized,
)

MASS_TOL = 1e-12
NORM_TOL = 1e-12
INFLATE_TOL = 1e-9
INFLATE_MAX_ITER = 200


@dataclass(frozen=True)
class UnitMeasure:
    """Discrete probability measure on [0, 1) with sorted, distinct atoms."""

    alphas: tuple[float, ...]
    masses: tuple[float, ...]

    def __post_init__(self):
        if len(self.alphas) == 0 or len(self.alphas) != len(self.masses):
            raise InvalidMeasure("need matching, nonempty alphas and masses")
        for a in self.alphas:
            if not 0.0 <= a < 1.0:
                raise InvalidMeasure(f"alpha={a!r} not in [0, 1)")
        for m in self.masses:
            if not m > 0.0:
                raise InvalidMeasure(f"mass {m!r} is not positive")
        for a, b in zip(self.alphas, self.alphas[1:]):
            if not a < b:
                raise InvalidMeasure("alphas must be strictly increasing")
        total = math.fsum(self.masses)
        if abs(total - 1.0) > MASS_TOL:
            raise InvalidMeasure(f"masses sum to {total!r}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]], normalize: bool = False) -> "UnitMeasure":
        """Sort ``(alpha, mass)`` pairs and merge repeated alphas."""
        items = sorted((float(a), float(m)) for a, m in pairs)
        alphas: list[float] = []
        groups: list[list[float]] = []
        for a, m in items:
            if alphas and alphas[-1] == a:
                groups[-1].append(m)
            else:
                alphas.append(a)
                groups.append([m])
        masses = [math.fsum(g) for g in groups]
        if normalize:
            total = math.fsum(masses)
            masses = [m / total for m in masses]
        return cls(tuple(alphas), tuple(masses))

    def pairs(self) -> list[tuple[float, float]]:
        return list(zip(self.alphas, self.masses))

    def cdf(self, x: float) -> float:
        return math.fsum(m for a, m in zip(self.alphas, self.masses) if a <= x)


def dirac(alpha: float) -> UnitMeasure:
    return UnitMeasure((float(alpha),), (1.0,))


@dataclass(frozen=True)
class SpectralStep:
    """Nonnegative, nondecreasing, right-continuous step function on [0, 1).

    ``levels[k]`` applies on ``[froms[k], froms[k+1])``. Unit integral is not
    enforced here; operations that need it check :meth:`is_normalized`.
    """

    froms: tuple[float, ...]
    levels: tuple[float, ...]

    def __post_init__(self):
        if len(self.froms) == 0 or len(self.froms) != len(self.levels):
            raise InvalidSpectrum("need matching, nonempty froms and levels")
        if self.froms[0] != 0.0:
            raise InvalidSpectrum("first piece must start at 0")
        for a, b in zip(self.froms, self.froms[1:]):
            if not a < b:
                raise InvalidSpectrum("froms must be strictly increasing")
        if not self.froms[-1] < 1.0:
            raise InvalidSpectrum("pieces must start below 1")
        if not self.levels[0] >= 0.0:
            raise InvalidSpectrum("levels must be nonnegative")
        for a, b in zip(self.levels, self.levels[1:]):
            if not a <= b:
                raise InvalidSpectrum("levels must be nondecreasing")
        if not all(math.isfinite(v) for v in self.levels):
            raise InvalidSpectrum("levels must be finite")

    @classmethod
    def from_pieces(cls, pieces: Iterable[tuple[float, float]]) -> "SpectralStep":
        """Canonicalize ``(from, level)`` pairs.

        Zero-width pieces are dropped, adjacent equal levels merged, and
        decreases within rounding (1e-12 relative) snapped flat.
        """
        items = sorted((float(a), float(v)) for a, v in pieces)
        froms: list[float] = []
        levels: list[float] = []
        for a, v in items:
            if froms and froms[-1] == a:
                levels[-1] = v
                continue
            if levels and v < levels[-1] and levels[-1] - v <= 1e-12 * max(1.0, abs(v)):
                v = levels[-1]
            if levels and v == levels[-1]:
                continue
            froms.append(a)
            levels.append(v)
        if froms and froms[0] != 0.0:
            raise InvalidSpectrum("first piece must start at 0")
        return cls(tuple(froms), tuple(levels))

    def pairs(self) -> list[tuple[float, float]]:
        return list(zip(self.froms, self.levels))

    def widths(self) -> list[float]:
        ends = list(self.froms[1:]) + [1.0]
        return [b - a for a, b in zip(self.froms, ends)]

    @cached_property
    def integral(self) -> float:
        return math.fsum(w * v for w, v in zip(self.widths(), self.levels))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.integral - 1.0) <= tol

    def __call__(self, u: float) -> float:
        k = int(np.searchsorted(self.froms, u, side="right")) - 1
        return self.levels[max(k, 0)]

    def head_integral(self, x: float) -> float:
        """``int_0^x sigma``."""
        terms = []
        ends = list(self.froms[1:]) + [1.0]
        for a, b, v in zip(self.froms, ends, self.levels):
            if a >= x:
                break
            terms.append(v * (min(b, x) - a))
        return math.fsum(terms)

    def tail_integral(self, gamma: float) -> float:
        """``int_gamma^1 sigma``."""
        terms = []
        ends = list(self.froms[1:]) + [1.0]
        for a, b, v in zip(self.froms, ends, self.levels):
            if b <= gamma:
                continue
            terms.append(v * (b - max(a, gamma)))
        return math.fsum(terms)

    @cached_property
    def froms_array(self) -> np.ndarray:
        return np.asarray(self.froms, dtype=float)

    @cached_property
    def levels_array(self) -> np.ndarray:
        return np.asarray(self.levels, dtype=float)


def constant_one() -> SpectralStep:
    return SpectralStep((0.0,), (1.0,))


def _require_normalized(sigma: SpectralStep, tol: float) -> None:
    if not sigma.is_normalized(tol):
        raise NotNormalized(f"spectral integral {sigma.integral!r} differs from 1 by more than {tol}")


def t_forward(mu: UnitMeasure) -> SpectralStep:
    """Spectral function of a mixing measure: ``sum c_i/(1-alpha_i) 1_[alpha_i, 1)``."""
    froms: list[float] = []
    levels: list[float] = []
    level = 0.0
    if mu.alphas[0] > 0.0:
        froms.append(0.0)
        levels.append(0.0)
    for a, c in zip(mu.alphas, mu.masses):
        level += c / (1.0 - a)
        froms.append(a)
        levels.append(level)
    return SpectralStep(tuple(froms), tuple(levels))


def t_inverse(sigma: SpectralStep, tol: float = NORM_TOL) -> UnitMeasure:
    """Mixing measure of a normalized spectral function.

    A jump of height ``D`` at ``a`` (including the initial level at 0)
    becomes mass ``(1 - a) * D`` at ``a``.
    """
    _require_normalized(sigma, tol)
    alphas: list[float] = []
    masses: list[float] = []
    prev = 0.0
    for a, v in zip(sigma.froms, sigma.levels):
        jump = v - prev
        prev = v
        if jump > 0.0:
            alphas.append(a)
            masses.append((1.0 - a) * jump)
    total = math.fsum(masses)
    return UnitMeasure(tuple(alphas), tuple(m / total for m in masses))


def q_norm(sigma: SpectralStep, q: float) -> float:
    """``(int_0^1 sigma^q)^{1/q}`` for finite ``q >= 1``."""
    if not q >= 1.0 or math.isinf(q):
        raise InvalidQ(f"q={q!r} must be finite and >= 1")
    s = math.fsum(w * v**q for w, v in zip(sigma.widths(), sigma.levels))
    return s if q == 1.0 else s ** (1.0 / q)


def shift_mass_right(sigma: SpectralStep, delta: float) -> SpectralStep:
    """Zero ``sigma`` on ``[0, delta)`` and spread that mass evenly over ``[delta, 1)``.

    The result is majorized-above ``sigma`` and has the same integral.
    """
    if delta <= 0.0:
        return sigma
    shift = sigma.head_integral(delta) / (1.0 - delta)
    pieces = [(0.0, 0.0), (delta, sigma(delta) + shift)]
    pieces.extend((a, v + shift) for a, v in zip(sigma.froms, sigma.levels) if a > delta)
    return SpectralStep.from_pieces(pieces)


def inflate_norm(sigma: SpectralStep, c: float, q: float) -> SpectralStep:
    """Push mass of ``sigma`` to the right until its q-norm equals ``c``.

    Bisection on the cut point ``delta`` of :func:`shift_mass_right`.
    """
    if not c > 1.0:
        raise InvalidParams(f"c={c!r} must exceed 1")
    if not q > 1.0 or math.isinf(q):
        raise InvalidQ(f"q={q!r} must be finite and > 1")
    start = q_norm(sigma, q)
    if start > c + INFLATE_TOL:
        raise AlreadyAboveTarget(f"q-norm {start!r} already exceeds {c!r}")
    if abs(start - c) <= INFLATE_TOL:
        return sigma

    lo, hi = 0.0, None
    for k in range(1, 64):
        cand = 1.0 - 2.0**-k
        if q_norm(shift_mass_right(sigma, cand), q) > c:
            hi = cand
            break
        lo = cand
    if hi is None:
        raise ConvergenceError("could not bracket the target norm")

    for _ in range(INFLATE_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        out = shift_mass_right(sigma, mid)
        gap = q_norm(out, q) - c
        if abs(gap) <= INFLATE_TOL:
            return out
        if gap > 0:
            hi = mid
        else:
            lo = mid
    raise ConvergenceError(f"bisection stalled at delta={mid!r}, residual {gap!r}")


def coarsen(sigma: SpectralStep, n: int) -> SpectralStep:
    """Average ``sigma`` over the cells ``[(i-1)/n, i/n)``."""
    if n < 1:
        raise InvalidParams("n must be a positive integer")
    cuts = [i / n for i in range(n + 1)]
    ends = list(sigma.froms[1:]) + [1.0]
    pieces = []
    for lo, hi in zip(cuts, cuts[1:]):
        parts = [
            (v, min(b, hi) - max(a, lo))
            for a, b, v in zip(sigma.froms, ends, sigma.levels)
            if a < hi and b > lo
        ]
        if len(parts) == 1:
            level = parts[0][0]
        else:
            level = math.fsum(v * w for v, w in parts) / math.fsum(w for _, w in parts)
        pieces.append((lo, level))
    return SpectralStep.from_pieces(pieces)
