"""AV@R, spectral and Kusuoka-mixture evaluation of a discrete distribution.

Three routes to the same number: the tail-average form of AV@R, the spectral
integral ``int sigma F^{-1}``, and ``sum_i c_i AV@R_{alpha_i}`` for a mixing
measure. All integrals are exact sums over step pieces.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import kernels
from .distribution import DiscreteDistribution, tail_integral
from .errors import AlphaOutOfRange, EmptyList, EmptySet
from .transform import NORM_TOL, SpectralStep, UnitMeasure, _require_normalized


class VariationalResult(NamedTuple):
    value: float
    argmin: float


class KusuokaValue(NamedTuple):
    value: float
    argmax: UnitMeasure


class FiniteMaxValue(NamedTuple):
    value: float
    index: int


@dataclass(frozen=True)
class KusuokaSet:
    """Nonempty, duplicate-free collection of mixing measures."""

    members: tuple[UnitMeasure, ...]

    def __post_init__(self):
        if len(self.members) == 0:
            raise EmptySet("a Kusuoka set needs at least one measure")
        seen = []
        for m in self.members:
            if m not in seen:
                seen.append(m)
        object.__setattr__(self, "members", tuple(seen))

    @classmethod
    def of(cls, members: Iterable[UnitMeasure]) -> "KusuokaSet":
        return cls(tuple(members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha < 1.0:
        raise AlphaOutOfRange(f"alpha={alpha!r} not in [0, 1)")


def avar(d: DiscreteDistribution, alpha: float) -> float:
    """``(1 - alpha)^{-1} int_alpha^1 F^{-1}``."""
    _check_alpha(alpha)
    return tail_integral(d, alpha) / (1.0 - alpha)


def avar_variational(d: DiscreteDistribution, alpha: float) -> VariationalResult:
    """Minimize ``t + E[(Z - t)_+] / (1 - alpha)`` over the atoms.

    The objective is piecewise linear with kinks only at atoms, so the atom
    minimum is exact. When several atoms tie, the largest one is reported;
    it is the right-side quantile at ``alpha``.
    """
    _check_alpha(alpha)
    z = d.values_array
    p = d.probs_array
    if d.n <= 512:
        excess = np.maximum(z[None, :] - z[:, None], 0.0) * p[None, :]
        expected = [math.fsum(row) for row in excess.tolist()]
    else:
        # suffix sums: E[(Z - z_k)_+] = sum_{j>k} p_j z_j - z_k sum_{j>k} p_j
        pz = np.concatenate([np.cumsum((p * z)[::-1])[::-1][1:], [0.0]])
        pp = np.concatenate([np.cumsum(p[::-1])[::-1][1:], [0.0]])
        expected = (pz - z * pp).tolist()
    phi = [t + e / (1.0 - alpha) for t, e in zip(d.values, expected)]
    best = min(phi)
    slack = 1e-13 * max(1.0, abs(best))
    k = max(i for i, v in enumerate(phi) if v <= best + slack)
    return VariationalResult(best, d.values[k])


def spectral_risk(d: DiscreteDistribution, sigma: SpectralStep, tol: float = NORM_TOL) -> float:
    """``int_0^1 sigma(t) F^{-1}(t) dt`` over the merged breakpoints."""
    _require_normalized(sigma, tol)
    return kernels.step_product_integral(
        sigma.froms_array, sigma.levels_array, d.quantile_from_array, d.values_array
    )


def mixture_avar(d: DiscreteDistribution, mu: UnitMeasure) -> float:
    """``int AV@R_alpha(Z) dmu(alpha)`` for a discrete mixing measure."""
    return math.fsum(c * avar(d, a) for a, c in zip(mu.alphas, mu.masses))


def kusuoka_eval(d: DiscreteDistribution, M: KusuokaSet | Sequence[UnitMeasure]) -> KusuokaValue:
    """Supremum of AV@R mixtures over a finite set; first maximizer wins ties."""
    members = M.members if isinstance(M, KusuokaSet) else tuple(M)
    if not members:
        raise EmptySet("empty Kusuoka set")
    best_val = -math.inf
    best = members[0]
    for mu in members:
        v = mixture_avar(d, mu)
        if v > best_val:
            best_val, best = v, mu
    return KusuokaValue(best_val, best)


def finite_max_risk(
    d: DiscreteDistribution, spectra: Sequence[SpectralStep], tol: float = NORM_TOL
) -> FiniteMaxValue:
    """Maximum of spectral risks over a list; index of the first maximizer."""
    if len(spectra) == 0:
        raise EmptyList("need at least one spectral function")
    best_val = -math.inf
    best_idx = 0
    for i, s in enumerate(spectra):
        v = spectral_risk(d, s, tol)
        if v > best_val:
            best_val, best_idx = v, i
    return FiniteMaxValue(best_val, best_idx)
