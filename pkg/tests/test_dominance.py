import pytest

from kusuoka import generators
from kusuoka.distribution import build
from kusuoka.dominance import downward_closure_member, fo_dominates, majorizes, prune_measures, prune_spectral
from kusuoka.errors import NotNormalized
from kusuoka.riskcore import KusuokaSet, kusuoka_eval
from kusuoka.transform import SpectralStep, UnitMeasure, constant_one, dirac, t_forward

MU1 = UnitMeasure.from_pairs([(0.2, 0.1), (0.6, 0.9)])
MU2 = UnitMeasure.from_pairs([(0.5, 0.2), (0.9, 0.8)])
HALF_TOP = SpectralStep.from_pieces([(0.0, 0.0), (0.5, 2.0)])


def average(s1, s2):
    cuts = sorted(set(s1.froms) | set(s2.froms))
    return SpectralStep.from_pieces((x, 0.5 * (s1(x) + s2(x))) for x in cuts)


def test_fo_examples(rng):
    for _ in range(20):
        mu = generators.random_measure(rng)
        assert fo_dominates(dirac(0.0), mu)
        assert fo_dominates(mu, mu)
    assert not fo_dominates(MU1, MU2)
    assert not fo_dominates(MU2, MU1)


def test_counterexample_cdfs_cross():
    assert MU1.cdf(0.55) < MU2.cdf(0.55)
    assert MU1.cdf(0.7) > MU2.cdf(0.7)


def test_majorizes_examples(rng):
    assert majorizes(constant_one(), HALF_TOP)
    assert not majorizes(HALF_TOP, constant_one())
    for _ in range(20):
        s = generators.random_spectral(rng)
        assert majorizes(s, s)
    assert majorizes(t_forward(MU1), t_forward(MU2))


def test_majorizes_requires_normalized():
    with pytest.raises(NotNormalized):
        majorizes(SpectralStep.from_pieces([(0.0, 2.0)]), constant_one())


def test_fo_implies_majorization(rng):
    for _ in range(300):
        mu = generators.random_measure(rng)
        nu = generators.dominating(rng, mu)
        assert fo_dominates(mu, nu)
        assert majorizes(t_forward(mu), t_forward(nu))


def test_prune_measures_examples():
    assert prune_measures(KusuokaSet.of([dirac(0.0), dirac(0.5)])).members == (dirac(0.5),)
    assert prune_measures(KusuokaSet.of([MU1])).members == (MU1,)
    assert prune_measures(KusuokaSet.of([MU1, MU2])).members == (MU1, MU2)


def test_prune_spectral_examples():
    assert prune_spectral([constant_one(), HALF_TOP]) == [HALF_TOP]
    assert prune_spectral([HALF_TOP]) == [HALF_TOP]
    s1 = HALF_TOP
    s2 = t_forward(UnitMeasure.from_pairs([(0.0, 0.5), (0.8, 0.5)]))
    s3 = average(s1, s2)
    assert s3.integral == pytest.approx(1.0)
    assert not majorizes(s1, s2) and not majorizes(s2, s1)
    assert prune_spectral([s1, s2, s3]) == [s1, s2, s3]


def test_prune_keeps_first_of_equivalent():
    a = HALF_TOP
    b = SpectralStep.from_pieces([(0.0, 0.0), (0.5, 2.0)])
    assert prune_spectral([a, b]) == [a]


def test_prune_and_closure_preserve_value(rng):
    for _ in range(50):
        d = generators.random_distribution(rng)
        members = [generators.random_measure(rng) for _ in range(int(rng.integers(1, 8)))]
        M = KusuokaSet.of(members)
        v = kusuoka_eval(d, M).value
        assert abs(kusuoka_eval(d, prune_measures(M)).value - v) <= 1e-10
        extra = [downward_closure_member(mu, rng.uniform(0, 0.5, len(mu.alphas)).tolist()) for mu in members]
        assert all(fo_dominates(e, mu) for e, mu in zip(extra, members))
        assert abs(kusuoka_eval(d, KusuokaSet.of(members + extra)).value - v) <= 1e-10


def test_pruned_members_are_maximal(rng):
    for _ in range(30):
        members = [generators.random_measure(rng, max_atoms=3) for _ in range(6)]
        members += [generators.dominated_by(rng, m) for m in members]
        kept = prune_measures(KusuokaSet.of(members)).members
        for i, a in enumerate(kept):
            for j, b in enumerate(kept):
                if i != j:
                    assert not (fo_dominates(a, b) and a != b and not fo_dominates(b, a))
