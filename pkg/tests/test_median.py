import math

import numpy as np
import pytest

from projmax.dataset import PointSet
from projmax.matching import matching_value, max_matching_exact
from projmax.median import geometric_median, median_cost, weiszfeld_iterates

from conftest import random_point_set

SQUARE = PointSet([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


def test_two_points():
    ps = PointSet([[0.0, 0.0], [2.0, 1.0]])
    _, cost = geometric_median(ps)
    assert cost == pytest.approx(math.sqrt(5), abs=1e-9)


def test_equilateral_triangle():
    ps = PointSet([[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3) / 2]])
    point, cost = geometric_median(ps)
    assert cost == pytest.approx(math.sqrt(3), abs=1e-8)
    assert np.allclose(point, [0.5, math.sqrt(3) / 6], atol=1e-6)


def test_unit_square():
    point, cost = geometric_median(SQUARE)
    assert cost == pytest.approx(2 * math.sqrt(2), abs=1e-8)
    assert np.allclose(point, [0.5, 0.5], atol=1e-6)


def test_median_cost_examples():
    single = PointSet([[4.0, 4.0]])
    assert median_cost(single, np.array([4.0, 4.0])) == 0.0
    assert median_cost(SQUARE, np.array([0.5, 0.5])) == pytest.approx(2 * math.sqrt(2))
    line = PointSet([[0.0], [10.0]])
    assert median_cost(line, np.array([0.0])) == pytest.approx(10.0)
    with pytest.raises(ValueError):
        median_cost(SQUARE, np.array([0.5]))
    with pytest.raises(ValueError):
        median_cost(SQUARE, np.array([np.nan, 0.0]))


def test_cost_monotone_along_iterates(rng):
    for _ in range(10):
        ps = random_point_set(rng, int(rng.integers(2, 15)), int(rng.integers(1, 5)))
        costs = [median_cost(ps, y) for y in weiszfeld_iterates(ps, max_iter=200)]
        diffs = np.diff(costs)
        assert np.all(diffs <= 1e-12)


def test_cost_beats_starting_mean(rng):
    for _ in range(10):
        ps = random_point_set(rng, 12, 3)
        _, cost = geometric_median(ps)
        assert cost <= median_cost(ps, ps.coords.mean(axis=0)) + 1e-12


def test_data_point_optimum():
    # center of a star is a data point and optimal; the singular term must
    # not derail the iteration
    ps = PointSet([[0.0, 0.0], [1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
    point, cost = geometric_median(ps)
    assert np.allclose(point, [0.0, 0.0], atol=1e-8)
    assert cost == pytest.approx(4.0, abs=1e-8)


def test_all_points_identical():
    ps = PointSet([[2.0, 2.0]] * 3)
    point, cost = geometric_median(ps)
    assert np.allclose(point, [2.0, 2.0])
    assert cost == pytest.approx(0.0, abs=1e-12)


def test_bad_tol():
    with pytest.raises(ValueError):
        geometric_median(SQUARE, tol=0.0)


def test_sqrt2_sandwich(rng):
    for _ in range(50):
        n = int(rng.integers(1, 7)) * 2
        d = int(rng.integers(1, 7))
        ps = random_point_set(rng, n, d)
        opt = matching_value(ps, max_matching_exact(ps))
        _, cost = geometric_median(ps)
        assert opt <= cost + 1e-7
        assert cost <= math.sqrt(2) * opt + 1e-7
