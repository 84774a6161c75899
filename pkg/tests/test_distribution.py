import math

import numpy as np
import pytest

from kusuoka.distribution import (
    build,
    dirac,
    from_samples,
    positive_part_norm,
    quantile,
    step_quantile,
    tail_integral,
)
from kusuoka.errors import GammaOutOfRange, InvalidP, NonpositiveProb, ProbSumOutOfTolerance, TauOutOfRange


def test_build_sorts():
    assert build([(2, 0.5), (1, 0.5)]).pairs() == [(1.0, 0.5), (2.0, 0.5)]


def test_build_merges_duplicates():
    assert build([(1, 0.25), (1, 0.25), (4, 0.5)]).pairs() == [(1.0, 0.5), (4.0, 0.5)]


def test_build_rejects_bad_sum():
    with pytest.raises(ProbSumOutOfTolerance):
        build([(1, 0.3), (2, 0.6)])


def test_build_rejects_nonpositive_prob():
    with pytest.raises(NonpositiveProb):
        build([(1, 0.0), (2, 1.0)])
    with pytest.raises(NonpositiveProb):
        build([(1, -0.5), (2, 1.5)])


def test_build_renormalizes_within_tolerance():
    d = build([(1, 0.5 + 4e-10), (2, 0.5)])
    assert d.cum[-1] == 1.0
    assert math.isclose(math.fsum(d.probs), 1.0, abs_tol=1e-12)


def test_cum_strictly_increasing(rng):
    d = build(zip(rng.normal(size=40).tolist(), (np.ones(40) / 40).tolist()))
    assert all(a < b for a, b in zip(d.cum, d.cum[1:]))
    assert d.cum[-1] == 1.0


def test_from_samples_counts_repeats():
    d = from_samples([3, 1, 3, 3])
    assert d.pairs() == [(1.0, 0.25), (3.0, 0.75)]


@pytest.mark.parametrize("tau,expected", [(0.0, 1), (0.1, 1), (0.25, 2), (0.49, 2), (0.5, 3), (0.99, 4)])
def test_quantile_right_side(u4, tau, expected):
    assert quantile(u4, tau) == expected


def test_quantile_single_atom():
    d = dirac(5.0)
    for tau in (0.0, 0.3, 0.999):
        assert quantile(d, tau) == 5.0


@pytest.mark.parametrize("tau", [-0.1, 1.0, 1.5])
def test_quantile_out_of_range(u4, tau):
    with pytest.raises(TauOutOfRange):
        quantile(u4, tau)


def test_step_quantile_matches_atoms(u4):
    sq = step_quantile(u4)
    assert sq.widths() == pytest.approx([0.25] * 4)
    assert sq.integral() == pytest.approx(2.5)


@pytest.mark.parametrize("gamma,expected", [(0.0, 2.5), (0.5, 1.75), (1.0, 0.0), (0.625, 1.375)])
def test_tail_integral(u4, gamma, expected):
    assert tail_integral(u4, gamma) == pytest.approx(expected, abs=1e-15)


def test_tail_integral_out_of_range(u4):
    with pytest.raises(GammaOutOfRange):
        tail_integral(u4, 1.1)


def test_positive_part_norm_examples(u4, u02):
    assert positive_part_norm(u02, 1.0, 2.0) == 0.7071067811865476
    assert positive_part_norm(u4, 0.0, 1.0) == pytest.approx(2.5, abs=1e-15)
    assert positive_part_norm(u4, 4.0, 3.0) == 0.0
    assert positive_part_norm(u4, 10.0, 1.0) == 0.0


def test_positive_part_norm_rejects_p_below_one(u4):
    with pytest.raises(InvalidP):
        positive_part_norm(u4, 0.0, 0.5)


def test_quantile_matches_cdf_inversion(rng):
    for _ in range(10):
        d = build(zip(rng.normal(size=15).tolist(), rng.dirichlet(np.ones(15)).tolist()))
        taus = np.arange(10**4) / 10**4
        # right-side quantile: first atom whose cdf exceeds tau
        cdfs = np.array([d.cdf(v) for v in d.values])
        brute = [d.values[int(np.argmax(cdfs > t))] for t in taus]
        assert [quantile(d, float(t)) for t in taus] == brute


def test_step_quantile_mean_round_trip(rng):
    for _ in range(100):
        d = build(zip(rng.normal(size=20).tolist(), rng.dirichlet(np.ones(20)).tolist()))
        assert abs(step_quantile(d).integral() - d.mean) <= 1e-12


def test_permuted_builds_identical(rng):
    pairs = list(zip(rng.normal(size=12).tolist(), rng.dirichlet(np.ones(12)).tolist()))
    ref = step_quantile(build(pairs))
    for _ in range(10):
        perm = [pairs[i] for i in rng.permutation(len(pairs))]
        assert step_quantile(build(perm)) == ref


def test_tail_integral_shape(rng):
    for _ in range(50):
        d = build(zip(rng.uniform(0, 5, 10).tolist(), rng.dirichlet(np.ones(10)).tolist()))
        grid = sorted(set([0.0, 1.0, *d.cum, *[(a + b) / 2 for a, b in zip((0.0,) + d.cum, d.cum)]]))
        tails = [tail_integral(d, g) for g in grid]
        assert tails[0] == pytest.approx(d.mean, abs=1e-12)
        # nonnegative values: nonincreasing
        assert all(b <= a + 1e-12 for a, b in zip(tails, tails[1:]))
        # concave: slope -F^{-1} is nonincreasing
        slopes = [(tb - ta) / (gb - ga) for ta, tb, ga, gb in zip(tails, tails[1:], grid, grid[1:])]
        assert all(s2 <= s1 + 1e-9 for s1, s2 in zip(slopes, slopes[1:]))
