"""Two worked families with primal evaluators and dual witnesses.

Higher-order measure::

    rho(Z) = inf_t { t + c ||(Z - t)_+||_p },   c > 1, p >= 1

p-semideviation::

    rho(Z) = E[Z] + lambda ||(Z - E[Z])_+||_p,   0 <= lambda <= 1
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import kernels
from .distribution import DiscreteDistribution, positive_part_norm
from .errors import DegenerateDistribution, InvalidParams, LambdaOutOfRange, WitnessToleranceExceeded
from .riskcore import VariationalResult, avar, mixture_avar
from .transform import SpectralStep, UnitMeasure, inflate_norm, q_norm, t_forward

GOLDEN_TOL = 1e-10
WITNESS_TOL = 1e-6
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def conjugate(p: float) -> float:
    """Hölder conjugate ``q`` with ``1/p + 1/q = 1``."""
    return math.inf if p == 1.0 else p / (p - 1.0)


@dataclass(frozen=True)
class HigherOrderParams:
    c: float
    p: float

    def __post_init__(self):
        if not (self.c > 1.0 and math.isfinite(self.c)):
            raise InvalidParams(f"c={self.c!r} must be finite and > 1")
        if not (self.p >= 1.0 and math.isfinite(self.p)):
            raise InvalidParams(f"p={self.p!r} must be finite and >= 1")

    @property
    def q(self) -> float:
        return conjugate(self.p)


@dataclass(frozen=True)
class SemidevParams:
    lam: float
    p: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.lam <= 1.0:
            raise LambdaOutOfRange(f"lambda={self.lam!r} not in [0, 1]")
        if not (self.p >= 1.0 and math.isfinite(self.p)):
            raise InvalidParams(f"p={self.p!r} must be finite and >= 1")

    @property
    def q(self) -> float:
        return conjugate(self.p)


class HigherOrderWitness(NamedTuple):
    sigma: SpectralStep
    t_star: float
    kink: bool
    mean_residual: float


# --- higher-order measure -------------------------------------------------


def _phi(d: DiscreteDistribution, c: float, p: float, t: float) -> float:
    return t + c * positive_part_norm(d, t, p)


def _dphi(d: DiscreteDistribution, c: float, p: float, t: float) -> tuple[float, float]:
    """First and second derivative of the objective at ``t`` (p > 1, t below the top atom)."""
    z, w = d.values_array, d.probs_array
    mp = kernels.partial_moment(z, w, t, p)
    if mp <= 0.0:
        return 1.0, 0.0
    n = mp ** (1.0 / p)
    m1 = kernels.partial_moment(z, w, t, p - 1.0)
    m2 = kernels.partial_moment(z, w, t, p - 2.0)
    npm1 = n ** (p - 1.0)
    d1 = 1.0 - c * m1 / npm1
    d2 = c * (p - 1.0) * (m2 * npm1 - m1 * m1 / n) / (npm1 * npm1)
    return d1, d2


def _bracket(d: DiscreteDistribution, c: float) -> tuple[float, float]:
    # The objective dominates c E[Z] - (c - 1) t and equals z_max at t = z_max,
    # so no minimizer lies below (c E[Z] - z_max) / (c - 1).
    zmin, zmax = d.values[0], d.values[-1]
    return min(zmin, (c * d.mean - zmax) / (c - 1.0)), zmax


def _golden(f, a: float, b: float, tol: float) -> float:
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
    return 0.5 * (a + b)


def _polish(d: DiscreteDistribution, c: float, p: float, t: float, lo: float, hi: float) -> float:
    # Safeguarded Newton on the derivative; falls back to bisection steps.
    g, h = _dphi(d, c, p, t)
    a, b = lo, hi
    for _ in range(60):
        if g == 0.0:
            break
        if g < 0:
            a = max(a, t)
        else:
            b = min(b, t)
        step = t - g / h if h > 0 and math.isfinite(h) else None
        nxt = step if step is not None and a < step < b else 0.5 * (a + b)
        if nxt == t:
            break
        ng, nh = _dphi(d, c, p, nxt)
        if abs(ng) >= abs(g) and nxt == step:
            nxt = 0.5 * (a + b)
            ng, nh = _dphi(d, c, p, nxt)
        t, g, h = nxt, ng, nh
        if abs(g) <= 1e-15 or b - a <= 4e-16 * max(1.0, abs(t)):
            break
    return t


def _top_kink(d: DiscreteDistribution, c: float, p: float) -> bool:
    # left derivative at the top atom is 1 - c * p_max^{1/p}
    return c * d.probs[-1] ** (1.0 / p) >= 1.0


def higher_order_risk(d: DiscreteDistribution, params: HigherOrderParams) -> VariationalResult:
    """Value and minimizing ``t`` of ``inf_t { t + c ||(Z - t)_+||_p }``.

    For ``p = 1`` the objective is piecewise linear and minimized exactly over
    the atoms (smallest minimizing atom reported). For ``p > 1`` a
    golden-section search is followed by a Newton polish on the derivative.
    """
    c, p = params.c, params.p
    if d.n == 1:
        return VariationalResult(d.values[0], d.values[0])
    if p == 1.0:
        phi = [_phi(d, c, p, t) for t in d.values]
        best = min(phi)
        slack = 1e-13 * max(1.0, abs(best))
        k = min(i for i, v in enumerate(phi) if v <= best + slack)
        return VariationalResult(best, d.values[k])
    if _top_kink(d, c, p):
        return VariationalResult(d.values[-1], d.values[-1])
    lo, hi = _bracket(d, c)
    scale = max(1.0, hi - lo)
    t = _golden(lambda s: _phi(d, c, p, s), lo, hi, GOLDEN_TOL * scale)
    t = _polish(d, c, p, t, lo, hi)
    return VariationalResult(_phi(d, c, p, t), t)


def higher_order_dual(d: DiscreteDistribution, params: HigherOrderParams) -> HigherOrderWitness:
    """Maximizing spectral function of q-norm ``c`` for the higher-order measure.

    Off the kink, the witness is ``c (Z - t*)_+^{p-1} / ||(Z - t*)_+||_p^{p-1}``
    arranged in increasing order. When the minimizer sits on the top atom the
    uniform density on the top quantile cell is pushed right until its q-norm
    reaches ``c``.
    """
    c, p = params.c, params.p
    if p <= 1.0:
        raise InvalidParams("the witness needs 1 < p < inf")
    if d.n < 2:
        raise DegenerateDistribution("the witness needs at least two distinct atoms")
    q = params.q
    if _top_kink(d, c, p):
        base = 1.0 / (1.0 - d.cum[-2])
        sigma = inflate_norm(SpectralStep.from_pieces([(0.0, 0.0), (d.cum[-2], base)]), c, q)
        return HigherOrderWitness(sigma, d.values[-1], True, abs(sigma.integral - 1.0))

    t_star = higher_order_risk(d, params).argmin
    excess = [max(z - t_star, 0.0) for z in d.values]
    norm = positive_part_norm(d, t_star, p)
    if norm <= 0.0:
        raise WitnessToleranceExceeded("no mass above the minimizer")
    scale = c / norm ** (p - 1.0)
    zeta = [scale * x ** (p - 1.0) if x > 0 else 0.0 for x in excess]
    mean = math.fsum(w * v for w, v in zip(d.probs, zeta))
    residual = abs(mean - 1.0)
    if residual > WITNESS_TOL:
        raise WitnessToleranceExceeded(f"optimality residual {residual!r} at t*={t_star!r}")
    sigma = SpectralStep.from_pieces(zip(d.quantile_from_array.tolist(), zeta))
    return HigherOrderWitness(sigma, t_star, False, residual)


def higher_order_witness(d: DiscreteDistribution, params: HigherOrderParams) -> SpectralStep:
    return higher_order_dual(d, params).sigma


# --- p-semideviation ------------------------------------------------------


def semideviation_risk(d: DiscreteDistribution, params: SemidevParams) -> float:
    return d.mean + params.lam * positive_part_norm(d, d.mean, params.p)


def _semidev_direction(d: DiscreteDistribution, p: float) -> list[float]:
    """Unit-q-norm maximizer of ``E[zeta (Z - E Z)]`` over ``zeta >= 0``."""
    mean = d.mean
    if not any(z > mean for z in d.values):
        raise DegenerateDistribution("no atom lies above the mean")
    if p == 1.0:
        # sup-norm ball: indicator of {Z > E Z}
        return [1.0 if z > mean else 0.0 for z in d.values]
    norm = positive_part_norm(d, mean, p)
    return [(z - mean) ** (p - 1.0) / norm ** (p - 1.0) if z > mean else 0.0 for z in d.values]


def semidev_witness(d: DiscreteDistribution, params: SemidevParams) -> tuple[float, ...]:
    """Maximizing density ``(1 - lambda E[zeta']) + lambda zeta'``, one value per atom."""
    direction = _semidev_direction(d, params.p)
    e = math.fsum(w * v for w, v in zip(d.probs, direction))
    base = 1.0 - params.lam * e
    return tuple(base + params.lam * v for v in direction)


def semidev_spectral(d: DiscreteDistribution, params: SemidevParams) -> SpectralStep:
    """Normalized spectral function of the maximizing direction.

    Plugged into :func:`semidev_mixture_value` through its mixing measure it
    attains the semideviation.
    """
    direction = _semidev_direction(d, params.p)
    e = math.fsum(w * v for w, v in zip(d.probs, direction))
    return SpectralStep.from_pieces(zip(d.quantile_from_array.tolist(), (v / e for v in direction)))


def semidev_mixture_value(d: DiscreteDistribution, mu: UnitMeasure, params: SemidevParams) -> float:
    """``(1 - lambda/s) E[Z] + (lambda/s) int AV@R dmu`` with ``s`` the q-norm of the spectrum of ``mu``."""
    sigma = t_forward(mu)
    q = params.q
    s = sigma.levels[-1] if math.isinf(q) else q_norm(sigma, q)
    w = params.lam / s
    return (1.0 - w) * d.mean + w * mixture_avar(d, mu)


def absolute_semidev_kusuoka(d: DiscreteDistribution, lam: float) -> VariationalResult:
    """Maximize ``(1 - lambda k) E[Z] + lambda k AV@R_{1-k}(Z)`` over ``k``.

    The objective is piecewise linear in ``k`` with kinks at ``1 - cum``, so
    the maximum over those candidates is exact. The smallest maximizing ``k``
    is returned as ``argmin`` of the result tuple.
    """
    if not 0.0 <= lam <= 1.0:
        raise LambdaOutOfRange(f"lambda={lam!r} not in [0, 1]")
    mean = d.mean
    alphas = (0.0,) + d.cum[:-1]
    values = []
    for a in alphas:
        kappa = 1.0 - a
        values.append((1.0 - lam * kappa) * mean + lam * kappa * avar(d, a))
    best = max(values)
    slack = 1e-13 * max(1.0, abs(best))
    k = max(i for i, v in enumerate(values) if v >= best - slack)
    return VariationalResult(best, 1.0 - alphas[k])


def prob_above_mean(d: DiscreteDistribution) -> float:
    """``P(Z > E[Z])`` as ``1 - F(E[Z])``."""
    return 1.0 - d.cdf(d.mean)


__all__ = [
    "HigherOrderParams",
    "SemidevParams",
    "HigherOrderWitness",
    "conjugate",
    "higher_order_risk",
    "higher_order_dual",
    "higher_order_witness",
    "semideviation_risk",
    "semidev_witness",
    "semidev_spectral",
    "semidev_mixture_value",
    "absolute_semidev_kusuoka",
    "prob_above_mean",
]
