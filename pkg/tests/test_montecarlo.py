import math
from fractions import Fraction as F

import numpy as np
import pytest

from indevents import (
    SampleConfig,
    SeriesFamily,
    borel_cantelli_scan,
    estimate_union_bernoulli,
    estimate_union_geometric,
    kernels,
    realize,
)
from indevents.errors import DomainError
from indevents.montecarlo import scan_csv
from indevents.realizer import Construction, Rect

from oracles import GEOMETRIC_HALF_LIMIT

X3 = [F(1, 2), F(1, 3), F(1, 4)]


def within(est, truth, k=4.0):
    return abs(est.estimate - truth) <= k * est.stderr


def test_bernoulli_example(backend):
    est = estimate_union_bernoulli(X3, SampleConfig(seed=2024, n_samples=10**6, backend=backend))
    assert within(est, 0.75)
    assert est.stderr == pytest.approx(math.sqrt(est.estimate * (1 - est.estimate) / 10**6))


def test_bernoulli_degenerate(backend):
    cfg = SampleConfig(seed=5, n_samples=10**4, backend=backend)
    assert estimate_union_bernoulli([0.0, 0.0], cfg).estimate == 0.0
    assert estimate_union_bernoulli([0.2, 1.0], cfg).estimate == 1.0
    assert estimate_union_bernoulli([], cfg).estimate == 0.0


def test_geometric_example(backend):
    est = estimate_union_geometric(realize([F(1, 2), F(1, 3)]), SampleConfig(seed=7, n_samples=10**6, backend=backend))
    assert within(est, 2 / 3)


def test_geometric_degenerate(backend):
    cfg = SampleConfig(seed=1, n_samples=10**4, backend=backend)
    assert estimate_union_geometric(realize([]), cfg).estimate == 0.0
    assert estimate_union_geometric(realize([F(1)]), cfg).estimate == 1.0


def test_geometric_general_rectangles(backend):
    # a hand-built event that is not a full-height strip exercises the rectangle kernel
    r = Rect(F(1, 4), F(3, 4), F(1, 4), F(3, 4))
    rest = [Rect(F(0), F(1, 4)), Rect(F(3, 4), F(1)), Rect(F(1, 4), F(3, 4), F(0), F(1, 4)),
            Rect(F(1, 4), F(3, 4), F(3, 4), F(1))]
    c = Construction(realize([F(1, 4)]).probs, ((r,),), {0: tuple(rest), 1: (r,)})
    est = estimate_union_geometric(c, SampleConfig(seed=3, n_samples=200_000, backend=backend))
    assert within(est, 0.25)


def test_determinism_and_worker_independence():
    base = SampleConfig(seed=99, n_samples=300_001, streams=7)
    a = estimate_union_bernoulli(X3, base)
    b = estimate_union_bernoulli(X3, base)
    c = estimate_union_bernoulli(X3, SampleConfig(seed=99, n_samples=300_001, streams=7, workers=4))
    assert a == b == c
    g1 = estimate_union_geometric(realize(X3), base)
    g2 = estimate_union_geometric(realize(X3), SampleConfig(seed=99, n_samples=300_001, streams=7, workers=3))
    assert g1 == g2


def test_streams_change_the_draws():
    a = estimate_union_bernoulli(X3, SampleConfig(seed=1, n_samples=10**5, streams=1))
    b = estimate_union_bernoulli(X3, SampleConfig(seed=1, n_samples=10**5, streams=2))
    assert a.hits != b.hits


def test_backends_agree_bit_for_bit():
    if len(kernels.BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    c, p = kernels.get("cython"), kernels.get("python")
    for seed, stream in [(0, 0), (2**64 - 1, 3), (123456789, 17)]:
        assert np.array_equal(c.uniforms(seed, stream, 5, 1000), p.uniforms(seed, stream, 5, 1000))
        probs = np.array([0.1, 0.5, 0.0, 1.0, 0.3])
        assert np.array_equal(c.first_hits(seed, stream, 0, 70_000, probs), p.first_hits(seed, stream, 0, 70_000, probs))
        lo, hi = np.array([0.0, 0.3, 0.9]), np.array([0.1, 0.5, 1.0])
        assert c.strip_hits(seed, stream, 11, 70_000, lo, hi) == p.strip_hits(seed, stream, 11, 70_000, lo, hi)
        arrs = [np.array(v) for v in ([0.1, 0.6], [0.4, 0.9], [0.2, 0.0], [0.5, 0.3])]
        assert c.rect_hits(seed, stream, 0, 70_000, *arrs) == p.rect_hits(seed, stream, 0, 70_000, *arrs)


def test_uniforms_look_uniform(backend):
    u = kernels.get(backend).uniforms(42, 0, 0, 200_000)
    assert u.min() >= 0 and u.max() < 1
    assert abs(u.mean() - 0.5) < 0.005
    counts = np.histogram(u, bins=20, range=(0, 1))[0]
    chi2 = ((counts - 10_000) ** 2 / 10_000).sum()
    assert chi2 < 60  # 19 dof; p ~ 3e-6


def test_estimator_consistency_band():
    truth = 0.75
    inside = 0
    for seed in range(100):
        est = estimate_union_bernoulli(X3, SampleConfig(seed=10_000 + seed, n_samples=10**6))
        inside += within(est, truth)
    assert inside >= 99


def test_bernoulli_and_geometric_agree():
    cfg = SampleConfig(seed=77, n_samples=10**6)
    a = estimate_union_bernoulli(X3, cfg)
    b = estimate_union_geometric(realize(X3), cfg)
    assert abs(a.estimate - b.estimate) <= 8 * math.hypot(a.stderr, b.stderr)


def test_scan_harmonic():
    rows = borel_cantelli_scan(SeriesFamily.shifted_harmonic(), 100, SampleConfig(seed=3, n_samples=20_000))
    assert [r.exact for r in rows] == [F(n, n + 1) for n in range(1, 101)]
    assert all(abs(r.empirical - float(r.exact)) <= 5 * r.stderr + 1e-12 for r in rows)


def test_scan_geometric_plateau():
    rows = borel_cantelli_scan(SeriesFamily.geometric(F(1, 2), F(1, 2)), 30, SampleConfig(seed=4, n_samples=10_000))
    assert abs(float(rows[-1].exact) - GEOMETRIC_HALF_LIMIT) <= 1e-6
    assert float(rows[-1].exact) < 1


def test_scan_constant_zero():
    rows = borel_cantelli_scan(SeriesFamily.constant(0), 10, SampleConfig(seed=4, n_samples=1000))
    assert all(r.exact == 0 and r.empirical == 0 for r in rows)


def test_scan_monotone_exact_column():
    for fam in (SeriesFamily.power(F(1, 2), 2), SeriesFamily.shifted_harmonic(), SeriesFamily.geometric(0.3, 0.9)):
        rows = borel_cantelli_scan(fam, 60, SampleConfig(seed=1, n_samples=1000))
        vals = [r.exact for r in rows]
        assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_scan_rejects_sure_events():
    with pytest.raises(DomainError):
        borel_cantelli_scan(SeriesFamily.constant(1), 5, SampleConfig())


def test_scan_csv():
    rows = borel_cantelli_scan(SeriesFamily.shifted_harmonic(), 2, SampleConfig(seed=0, n_samples=100))
    lines = scan_csv(rows, exact=True).splitlines()
    assert lines[0] == "N,exact,empirical,stderr"
    assert lines[1].startswith("1,1/2,") and lines[2].startswith("2,2/3,")


def test_config_validation():
    with pytest.raises(DomainError):
        SampleConfig(n_samples=0)
    with pytest.raises(DomainError):
        SampleConfig(streams=0)
    assert sum(c for _, c in SampleConfig(n_samples=10, streams=3).blocks()) == 10
