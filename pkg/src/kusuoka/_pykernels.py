"""Pure-Python/numpy implementations of the hot kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Inputs are one-dimensional float64 arrays. Step functions on [0, 1) are passed
as ``(froms, levels)`` with ``froms[0] == 0`` and strictly increasing ``froms``;
the last piece extends to 1.
"""
import math

import numpy as np


def step_product_integral(a_from, a_level, b_from, b_level):
    """Exact integral over [0, 1) of the product of two step functions."""
    na = len(a_from)
    nb = len(b_from)
    i = j = 0
    x = 0.0
    terms = []
    while x < 1.0:
        next_a = a_from[i + 1] if i + 1 < na else 1.0
        next_b = b_from[j + 1] if j + 1 < nb else 1.0
        nxt = next_a if next_a < next_b else next_b
        if nxt > x:
            terms.append(a_level[i] * b_level[j] * (nxt - x))
        x = nxt
        if next_a == nxt and i + 1 < na:
            i += 1
        if next_b == nxt and j + 1 < nb:
            j += 1
    return math.fsum(terms)


def partial_moment(values, probs, t, p):
    """Sum of ``prob * (value - t)**p`` over atoms with ``value > t``.

    Only strictly positive excesses contribute, so negative ``p`` is allowed
    (used for second derivatives of the norm).
    """
    values = np.asarray(values, dtype=float)
    probs = np.asarray(probs, dtype=float)
    mask = values > t
    if not mask.any():
        return 0.0
    x = values[mask] - t
    w = probs[mask]
    if p == 1.0:
        terms = w * x
    elif p == 0.0:
        terms = w
    else:
        terms = w * x**p
    return math.fsum(terms.tolist())


def riemann_midpoint(s_from, s_level, q_from, q_value, n):
    """Midpoint Riemann sum of ``sigma * quantile`` over ``n`` equal cells."""
    u = (np.arange(n, dtype=float) + 0.5) / n
    si = np.searchsorted(np.asarray(s_from), u, side="right") - 1
    qi = np.searchsorted(np.asarray(q_from), u, side="right") - 1
    prod = np.asarray(s_level)[si] * np.asarray(q_value)[qi]
    return math.fsum(prod.tolist()) / n


def grid_phi_min(values, probs, c, p, lo, hi, n, chunk=20000):
    """Minimum of ``t + c * ||(Z - t)_+||_p`` over ``n`` equally spaced ``t``."""
    values = np.asarray(values, dtype=float)
    probs = np.asarray(probs, dtype=float)
    best = math.inf
    step = (hi - lo) / (n - 1) if n > 1 else 0.0
    for start in range(0, n, chunk):
        k = np.arange(start, min(n, start + chunk), dtype=float)
        t = lo + step * k
        x = np.maximum(values[None, :] - t[:, None], 0.0)
        m = (x**p) @ probs
        phi = t + c * m ** (1.0 / p)
        best = min(best, float(phi.min()))
    return best


def subset_sum_collision(targets, others, tol):
    """True iff some nonempty subset sum of ``others`` is within ``tol`` of a target.

    ``targets`` must be sorted ascending.
    """
    targets = np.asarray(targets, dtype=float)
    if len(targets) == 0 or len(others) == 0:
        return False
    sums = np.zeros(1)
    for p in others:
        sums = np.concatenate([sums, sums + p])
    sums = sums[1:]
    idx = np.searchsorted(targets, sums)
    lo = np.clip(idx - 1, 0, len(targets) - 1)
    hi = np.clip(idx, 0, len(targets) - 1)
    gap = np.minimum(np.abs(sums - targets[lo]), np.abs(sums - targets[hi]))
    return bool((gap <= tol).any())
