"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
numpy fallback in ``_pykernels``. Set ``KUSUOKA_PURE_PYTHON=1`` to force the
fallback.
"""
import os

if os.environ.get("KUSUOKA_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

step_product_integral = _impl.step_product_integral
partial_moment = _impl.partial_moment
riemann_midpoint = _impl.riemann_midpoint
grid_phi_min = _impl.grid_phi_min
subset_sum_collision = _impl.subset_sum_collision

__all__ = [
    "BACKEND",
    "step_product_integral",
    "partial_moment",
    "riemann_midpoint",
    "grid_phi_min",
    "subset_sum_collision",
]
