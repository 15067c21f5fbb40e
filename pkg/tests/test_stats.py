"""Density, percentile, and mode behavior against brute-force oracles."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from healthbench.errors import EmptySegmentError
from healthbench.stats import (
    GRID_SIZE,
    DensityCurve,
    Sample,
    cumulative_percentile,
    find_mode,
    kde,
    summarize,
    weighted_percentile,
)
from oracles import oracle_density_at, oracle_percentile, oracle_unweighted_kde_curve

GRID_STEP = 9.0 / (GRID_SIZE - 1)


def _sample(values, weights=None):
    if weights is None:
        weights = [1.0] * len(values)
    return Sample(values=tuple(values), weights=tuple(weights))


samples_strategy = st.lists(
    st.tuples(
        st.floats(min_value=1.0, max_value=10.0, allow_nan=False),
        st.floats(min_value=0.01, max_value=1000.0, allow_nan=False),
    ),
    min_size=1,
    max_size=40,
).map(lambda ps: _sample([p[0] for p in ps], [p[1] for p in ps]))


# --- Sample validation ---------------------------------------------------------


def test_sample_rejects_bad_inputs():
    with pytest.raises(ValueError):
        _sample([5.0], [1.0, 2.0])
    with pytest.raises(ValueError):
        _sample([5.0], [0.0])
    with pytest.raises(ValueError):
        _sample([0.5], [1.0])


# --- weighted_percentile ---------------------------------------------------------


def test_percentile_decile_hand_computed():
    s = _sample([float(v) for v in range(1, 11)])
    assert weighted_percentile(s, 0.1) == 1.0
    assert weighted_percentile(s, 0.9) == 9.0


def test_percentile_singleton():
    for p in (0.01, 0.5, 0.99):
        assert weighted_percentile(_sample([7.3]), p) == 7.3


def test_percentile_weight_dominance():
    s = _sample([2.0, 9.0], [9.0, 1.0])
    assert weighted_percentile(s, 0.9) == 2.0


def test_percentile_rejects_bad_p():
    with pytest.raises(ValueError):
        weighted_percentile(_sample([5.0]), 0.0)
    with pytest.raises(ValueError):
        weighted_percentile(_sample([5.0]), 1.0)


@settings(max_examples=300)
@given(sample=samples_strategy, p=st.floats(min_value=0.001, max_value=0.999))
def test_percentile_matches_oracle_exactly(sample, p):
    got = weighted_percentile(sample, p)
    want = oracle_percentile(list(sample.values), list(sample.weights), p)
    assert got == want


@settings(max_examples=200)
@given(
    sample=samples_strategy,
    p=st.floats(min_value=0.001, max_value=0.999),
    q=st.floats(min_value=0.001, max_value=0.999),
)
def test_percentile_monotone_in_p(sample, p, q):
    lo, hi = min(p, q), max(p, q)
    assert weighted_percentile(sample, lo) <= weighted_percentile(sample, hi)


def test_percentile_exact_under_weight_doubling():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 30)
        values = [rng.uniform(1, 10) for _ in range(n)]
        weights = [rng.uniform(0.1, 50) for _ in range(n)]
        doubled = [2.0 * w for w in weights]
        for p in (0.1, 0.25, 0.5, 0.9):
            assert cumulative_percentile(values, weights, p) == cumulative_percentile(
                values, doubled, p
            )


# --- kde -------------------------------------------------------------------------


def test_kde_matches_brute_force_double_loop():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 30)
        values = [rng.uniform(1, 10) for _ in range(n)]
        weights = [rng.uniform(0.1, 100) for _ in range(n)]
        curve = kde(_sample(values, weights))
        for g, d in zip(curve.grid[::37], curve.density[::37]):
            want = oracle_density_at(g, values, weights, curve.bandwidth)
            assert abs(d - want) < 1e-12


def test_kde_equal_weights_match_unweighted_formula():
    rng = random.Random(13)
    for _ in range(10):
        n = rng.randint(2, 40)
        values = [rng.uniform(1, 10) for _ in range(n)]
        curve = kde(_sample(values, [3.0] * n))
        want, h = oracle_unweighted_kde_curve(values, curve.grid)
        assert abs(curve.bandwidth - h) < 1e-12
        assert max(abs(d - w) for d, w in zip(curve.density, want)) < 1e-12


def test_kde_symmetric_two_point_sample():
    curve = kde(_sample([4.0, 8.0]))
    values, weights = [4.0, 8.0], [1.0, 1.0]
    # The density function is symmetric about 6: probe constructed mirror pairs.
    for t in np.linspace(0.0, 3.5, 113):
        left = oracle_density_at(6.0 - t, values, weights, curve.bandwidth)
        right = oracle_density_at(6.0 + t, values, weights, curve.bandwidth)
        assert abs(left - right) < 1e-9
    # And the produced curve agrees with that same function on its grid.
    for g, d in zip(curve.grid[::17], curve.density[::17]):
        assert abs(d - oracle_density_at(g, values, weights, curve.bandwidth)) < 1e-12


def test_kde_single_point_uses_floor_bandwidth():
    curve = kde(_sample([5.0]))
    assert curve.bandwidth == 0.05
    assert find_mode(curve) == pytest.approx(5.0, abs=GRID_STEP)


@settings(max_examples=150, deadline=None)
@given(sample=samples_strategy)
def test_kde_mass_never_exceeds_one(sample):
    curve = kde(sample)
    assert all(d >= 0.0 for d in curve.density)
    assert curve.mass() <= 1.0 + 1e-9


def test_kde_mass_near_one_for_interior_samples():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randint(20, 200)
        values = [rng.uniform(2.5, 8.5) for _ in range(n)]
        weights = [rng.uniform(0.5, 20) for _ in range(n)]
        mass = kde(_sample(values, weights)).mass()
        assert 0.95 <= mass <= 1.0 + 1e-9


def test_kde_exact_under_weight_doubling():
    values = [2.5, 4.0, 9.1, 6.6]
    weights = [1.7, 2.9, 0.4, 11.0]
    a = kde(_sample(values, weights))
    b = kde(_sample(values, [2 * w for w in weights]))
    assert a.bandwidth == b.bandwidth
    assert a.density == b.density


# --- find_mode -------------------------------------------------------------------


def test_mode_single_kernel():
    curve = kde(_sample([7.0]))
    assert abs(find_mode(curve) - 7.0) <= GRID_STEP


def test_mode_bimodal_heavier_left_wins():
    values = [3.0] * 3 + [8.0] * 2
    curve = kde(_sample(values))
    dens = [oracle_density_at(g, values, [1.0] * 5, curve.bandwidth) for g in curve.grid]
    want = curve.grid[dens.index(max(dens))]
    assert find_mode(curve) == want
    assert abs(find_mode(curve) - 3.0) < 0.5


def test_mode_flat_density_ties_to_smallest_grid_point():
    flat = DensityCurve(
        grid=tuple(np.linspace(1, 10, GRID_SIZE)),
        density=(0.1,) * GRID_SIZE,
        bandwidth=1.0,
        n=4,
    )
    assert find_mode(flat) == 1.0


# --- summarize -------------------------------------------------------------------


def test_summarize_degenerate_sample():
    curve = summarize(_sample([6.25] * 5))
    assert abs(curve.mode - 6.25) <= GRID_STEP
    assert curve.p10 == 6.25
    assert curve.p90 == 6.25


def test_summarize_matches_percentile_oracle():
    rng = random.Random(23)
    values = [rng.uniform(1, 10) for _ in range(200)]
    weights = [rng.uniform(0.1, 30) for _ in range(200)]
    curve = summarize(_sample(values, weights))
    assert curve.p10 == oracle_percentile(values, weights, 0.1)
    assert curve.p90 == oracle_percentile(values, weights, 0.9)
    assert curve.p10 <= curve.p90


def test_summarize_empty_sample_is_error():
    with pytest.raises(EmptySegmentError):
        summarize(Sample(values=(), weights=()))


def test_density_table_shape():
    table = summarize(_sample([5.0, 6.0])).table()
    rows = table.splitlines()
    assert len(rows) == GRID_SIZE
    g, d = rows[0].split("\t")
    assert float(g) == 1.0 and float(d) >= 0.0
