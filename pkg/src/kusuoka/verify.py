"""Self-check battery run by ``kusuoka verify`` against one distribution."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import generators, oracle
from .distribution import DiscreteDistribution, build
from .dominance import fo_dominates, majorizes, prune_measures
from .errors import DegenerateDistribution
from .families import (
    HigherOrderParams,
    SemidevParams,
    absolute_semidev_kusuoka,
    higher_order_dual,
    higher_order_risk,
    semideviation_risk,
    semidev_witness,
)
from .riskcore import KusuokaSet, avar, avar_variational, kusuoka_eval, mixture_avar, spectral_risk
from .transform import SpectralStep, UnitMeasure, q_norm, t_forward, t_inverse

WITNESS_TOL = 1e-6
ORACLE_REL_TOL = 1e-4


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    residual: float

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "residual": abs(self.residual)}


def counterexample_pair() -> tuple[UnitMeasure, UnitMeasure]:
    """Two measures whose spectra are ordered by majorization while the measures are not first-order ordered."""
    return (
        UnitMeasure.from_pairs([(0.2, 0.1), (0.6, 0.9)]),
        UnitMeasure.from_pairs([(0.5, 0.2), (0.9, 0.8)]),
    )


def _max(xs) -> float:
    xs = list(xs)
    return max(xs) if xs else 0.0


def _measure_gap(a: UnitMeasure, b: UnitMeasure) -> float:
    if len(a.alphas) != len(b.alphas):
        return math.inf
    return _max(abs(x - y) for x, y in zip(a.alphas + a.masses, b.alphas + b.masses))


def _spectral_gap(a: SpectralStep, b: SpectralStep) -> float:
    if len(a.froms) != len(b.froms):
        return math.inf
    return _max(abs(x - y) for x, y in zip(a.froms + a.levels, b.froms + b.levels))


def _coherence_residuals(d: DiscreteDistribution, rng: np.random.Generator, evaluators) -> dict[str, float]:
    """Axiom residuals on an equal-probability lift of ``d``'s quantile grid."""
    # scenario vector on a shared 1/n grid
    n = 8
    z = np.array([d.values[min(np.searchsorted(d.cum, (i + 0.5) / n), d.n - 1)] for i in range(n)])
    z2 = rng.permutation(z) + rng.normal(0, 1, n)
    up = z + rng.exponential(1.0, n)
    theta = 0.3

    def law(x):
        return build((float(v), 1.0 / n) for v in x)

    out = {"translation": 0.0, "homogeneity": 0.0, "monotonicity": 0.0, "convexity": 0.0}
    for f in evaluators:
        base = f(law(z))
        out["translation"] = max(out["translation"], abs(f(law(z + 1.5)) - base - 1.5))
        out["homogeneity"] = max(out["homogeneity"], abs(f(law(2.0 * z)) - 2.0 * base))
        out["monotonicity"] = max(out["monotonicity"], max(0.0, base - f(law(up))))
        mix = f(law(theta * z + (1 - theta) * z2))
        out["convexity"] = max(out["convexity"], max(0.0, mix - theta * base - (1 - theta) * f(law(z2))))
    return out


def run_checks(
    d: DiscreteDistribution,
    tol: float = 1e-9,
    alphas: Sequence[float] | None = None,
    c: float = 2.0,
    p: float = 2.0,
    lam: float = 0.5,
    measures: Sequence[UnitMeasure] = (),
    spectra: Sequence[SpectralStep] = (),
    seed: int = 0,
) -> list[Check]:
    rng = np.random.default_rng(seed)
    alphas = list(alphas) if alphas else [0.05 * k for k in range(20)]
    checks: list[Check] = []

    r = _max(abs(avar(d, a) - avar_variational(d, a).value) for a in alphas)
    checks.append(Check("avar_dual_form", r <= tol, r))

    pool = list(measures) + [generators.random_measure(rng) for _ in range(25)]
    r = _max(_measure_gap(t_inverse(t_forward(mu)), mu) for mu in pool)
    sp_pool = list(spectra) + [generators.random_spectral(rng) for _ in range(25)]
    r = max(r, _max(_spectral_gap(t_forward(t_inverse(s)), s) for s in sp_pool))
    checks.append(Check("t_round_trip", r <= tol, r))

    r = _max(abs(mixture_avar(d, mu) - spectral_risk(d, t_forward(mu))) for mu in pool)
    checks.append(Check("identity_chain", r <= tol, r))

    violations = 0
    for mu in pool:
        nu = generators.dominating(rng, mu)
        if fo_dominates(mu, nu) and not majorizes(t_forward(mu), t_forward(nu)):
            violations += 1
    m1, m2 = counterexample_pair()
    counter_ok = majorizes(t_forward(m1), t_forward(m2)) and not fo_dominates(m1, m2)
    checks.append(Check("order_preservation", violations == 0, float(violations)))
    checks.append(Check("counterexample_one_way", counter_ok, 0.0 if counter_ok else 1.0))

    M = KusuokaSet.of(pool[:10] + [generators.dominated_by(rng, mu) for mu in pool[:10]])
    full = kusuoka_eval(d, M).value
    r = abs(full - kusuoka_eval(d, prune_measures(M)).value)
    aug = KusuokaSet.of(list(M.members) + [generators.dominated_by(rng, mu) for mu in M.members])
    r = max(r, abs(full - kusuoka_eval(d, aug).value))
    checks.append(Check("pruning_invariance", r <= tol, r))

    r = _max(
        abs(higher_order_risk(d, HigherOrderParams(1.0 / (1.0 - a), 1.0)).value - avar(d, a))
        for a in alphas
        if a > 0
    )
    checks.append(Check("higher_order_avar_reduction", r <= tol, r))

    wtol = max(tol, WITNESS_TOL)
    if d.n >= 2 and p > 1:
        params = HigherOrderParams(c, p)
        primal = higher_order_risk(d, params).value
        w = higher_order_dual(d, params)
        r = max(
            abs(q_norm(w.sigma, params.q) - c),
            abs(w.sigma.integral - 1.0),
            abs(spectral_risk(d, w.sigma, WITNESS_TOL) - primal),
        )
        checks.append(Check("higher_order_witness", r <= wtol, r))

    sp = SemidevParams(lam, p if p > 1 else 2.0)
    try:
        zeta = semidev_witness(d, sp)
        ez = math.fsum(w * v for w, v in zip(d.probs, zeta))
        ezz = math.fsum(w * v * z for w, v, z in zip(d.probs, zeta, d.values))
        r = max(abs(ez - 1.0), abs(ezz - semideviation_risk(d, sp)))
        checks.append(Check("semidev_witness", r <= tol, r))
    except DegenerateDistribution:
        pass

    r = abs(absolute_semidev_kusuoka(d, lam).value - semideviation_risk(d, SemidevParams(lam, 1.0)))
    checks.append(Check("absolute_semidev_kusuoka", r <= tol, r))

    sigma = t_forward(pool[0])
    exact = spectral_risk(d, sigma)
    r = abs(oracle.riemann_spectral(d, sigma, 10**6) - exact)
    checks.append(Check("oracle_riemann", r <= ORACLE_REL_TOL * max(1.0, abs(exact)), r))

    n_grid = 10**5
    exact = higher_order_risk(d, HigherOrderParams(c, p)).value
    grid = oracle.grid_min_variational(d, c, p, n_grid)
    bound = oracle.grid_resolution_bound(d, c, n_grid)
    r = grid - exact
    checks.append(Check("oracle_variational", -tol <= r <= bound + tol, r))

    res = _coherence_residuals(
        d,
        rng,
        [
            lambda x: avar(x, 0.5),
            lambda x: spectral_risk(x, sigma),
            lambda x: kusuoka_eval(x, M).value,
            lambda x: higher_order_risk(x, HigherOrderParams(c, p)).value,
            lambda x: semideviation_risk(x, SemidevParams(lam, p)),
            lambda x: absolute_semidev_kusuoka(x, lam).value,
        ],
    )
    # the p > 1 evaluator carries root-finding error, so axiom slack is 1e-10 at least
    atol = max(tol, 1e-10)
    for name, val in res.items():
        checks.append(Check(f"axiom_{name}", val <= atol, val))
    return checks
