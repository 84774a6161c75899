import os
import subprocess
import sys

import numpy as np
import pytest

from kusuoka import _pykernels, kernels

try:
    from kusuoka import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
BACKENDS.append(
    pytest.param(_ckernels, id="cython", marks=pytest.mark.skipif(_ckernels is None, reason="extension not built"))
)


def rand_steps(rng, k):
    froms = np.concatenate([[0.0], np.sort(rng.uniform(0, 1, k - 1))])
    return froms, np.cumsum(rng.exponential(1.0, k))


@pytest.mark.parametrize("mod", BACKENDS)
def test_step_product_integral(mod, rng):
    for _ in range(50):
        af, al = rand_steps(rng, int(rng.integers(1, 10)))
        bf, bl = rand_steps(rng, int(rng.integers(1, 10)))
        u = (np.arange(200000) + 0.5) / 200000
        brute = np.mean(al[np.searchsorted(af, u, "right") - 1] * bl[np.searchsorted(bf, u, "right") - 1])
        assert mod.step_product_integral(af, al, bf, bl) == pytest.approx(brute, rel=1e-3)
        assert mod.step_product_integral(af, al, bf, bl) == pytest.approx(
            _pykernels.step_product_integral(af, al, bf, bl), abs=1e-13
        )


@pytest.mark.parametrize("mod", BACKENDS)
def test_partial_moment(mod, rng):
    for _ in range(50):
        v = np.sort(rng.normal(size=20))
        pr = rng.dirichlet(np.ones(20))
        t = float(rng.normal())
        for p in (0.0, 1.0, 2.5, -1.0):
            mask = v > t
            expected = float(np.sum(pr[mask] * (v[mask] - t) ** p))
            assert mod.partial_moment(v, pr, t, p) == pytest.approx(expected, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("mod", BACKENDS)
def test_riemann_and_grid(mod, rng):
    sf, sl = rand_steps(rng, 5)
    qf = np.array([0.0, 0.3, 0.6])
    qv = np.array([-1.0, 0.5, 2.0])
    assert mod.riemann_midpoint(sf, sl, qf, qv, 1000) == pytest.approx(
        _pykernels.riemann_midpoint(sf, sl, qf, qv, 1000), abs=1e-12
    )
    vals, probs = np.array([0.0, 1.0, 3.0]), np.array([0.2, 0.5, 0.3])
    assert mod.grid_phi_min(vals, probs, 2.0, 2.0, -1.0, 3.0, 5001) == pytest.approx(
        _pykernels.grid_phi_min(vals, probs, 2.0, 2.0, -1.0, 3.0, 5001), abs=1e-12
    )


@pytest.mark.parametrize("mod", BACKENDS)
def test_subset_sum_collision(mod):
    assert mod.subset_sum_collision(np.array([0.5]), np.array([0.3, 0.2]), 1e-12)
    assert not mod.subset_sum_collision(np.array([0.2, 0.4]), np.array([0.3, 0.3]), 1e-12)
    assert mod.subset_sum_collision(np.array([0.6]), np.array([0.3, 0.3]), 1e-12)


def test_selector_exposes_backend():
    assert kernels.BACKEND in ("cython", "python")
    if _ckernels is not None:
        assert kernels.BACKEND == "cython" or os.environ.get("KUSUOKA_PURE_PYTHON", "") not in ("", "0")


def test_env_forces_python():
    out = subprocess.run(
        [sys.executable, "-c", "from kusuoka import kernels; print(kernels.BACKEND)"],
        env={**os.environ, "KUSUOKA_PURE_PYTHON": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_benchmark_quick_run(capsys):
    from pathlib import Path
    import runpy

    script = Path(__file__).parent.parent / "benchmarks" / "bench_kernels.py"
    mod = runpy.run_path(str(script))
    assert mod["main"](["--quick", "--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert "riemann_midpoint" in out and "subset_sum_collision" in out
