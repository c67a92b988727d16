# ifam - iterated finite automaton market simulator
#
# Copyright (c) The ifam authors, 2024
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import numpy as np
import pytest

from ifam.automaton import RuleSpec
from ifam.dynamics import generate_series
from ifam.ifamusererror import AggregationError, UndefinedMomentError
from ifam.stats import (TABLE_DAY_LENGTHS, aggregate_days, central_moments,
                        describe, excess_kurtosis, histogram, moving_average,
                        moving_average_histogram, random_walk_baseline,
                        series_summary, skewness, standard_errors,
                        summary_table)

RULE54 = RuleSpec(2, 2, 54)

# ticks per day, distinct, skewness, excess kurtosis
TABLE2 = [
    (32, 26, -0.34, 0.19),
    (64, 37, -0.74, 0.87),
    (128, 59, -0.98, 2.15),
    (256, 75, -1.08, 3.06),
    (512, 92, -1.07, 4.01),
    (1024, 109, -1.04, 4.96),
    (2048, 132, -1.27, 8.63),
    (4096, 157, -1.48, 10.46),
    (8192, 170, -1.70, 11.81),
    (16384, 154, -1.73, 11.20),
    (32768, 109, -1.54, 7.93),
    (65536, 59, -2.02, 8.61),
    (131072, 30, -1.65, 5.03),
]


def test_aggregate_days():
    assert aggregate_days([1, 1, -1, -1], 2).tolist() == [2, -2]
    assert len(aggregate_days(np.ones(2 ** 22, dtype=np.int64), 32)) \
        == 131072
    with pytest.raises(AggregationError):
        aggregate_days([1, 1, -1], 2)
    assert aggregate_days([1, 1, -1], 2, truncate=True).tolist() == [2]
    with pytest.raises(AggregationError):
        aggregate_days([1, 1], 0)


def test_aggregation_conservation():
    ticks = random_walk_baseline(4096, seed=3).changes
    for length in (1, 2, 16, 128, 4096):
        assert aggregate_days(ticks, length).sum() == ticks.sum()


def test_two_point_distribution():
    xs = [-1, 1] * 50
    assert skewness(xs) == pytest.approx(0.0, abs=1e-12)
    assert excess_kurtosis(xs) == pytest.approx(-2.0)


def test_undefined_moments():
    with pytest.raises(UndefinedMomentError):
        skewness([3, 3, 3])
    with pytest.raises(UndefinedMomentError):
        excess_kurtosis([1])
    with pytest.raises(AggregationError):
        central_moments([])


def test_affine_invariance():
    xs = random_walk_baseline(2 ** 14, seed=5).changes.reshape(-1, 64) \
        .sum(axis=1)
    for a, c in [(2.0, 0.0), (0.5, 17.0), (3.0, -4.0)]:
        ys = a * xs + c
        assert skewness(ys) == pytest.approx(skewness(xs), rel=1e-9,
                                             abs=1e-12)
        assert excess_kurtosis(ys) == pytest.approx(excess_kurtosis(xs),
                                                    rel=1e-9)


def test_sign_flip():
    xs = np.array([0, 1, 1, 2, 5, -3, 4, 4, 1], dtype=float)
    assert skewness(-xs) == pytest.approx(-skewness(xs), rel=1e-9)
    assert excess_kurtosis(-xs) == pytest.approx(excess_kurtosis(xs),
                                                 rel=1e-9)


def test_moments_match_direct_sums():
    xs = np.random.Generator(np.random.PCG64(11)).normal(size=10 ** 5)
    n = len(xs)
    mean = sum(xs) / n
    m2 = sum((x - mean) ** 2 for x in xs) / n
    m3 = sum((x - mean) ** 3 for x in xs) / n
    m4 = sum((x - mean) ** 4 for x in xs) / n
    moments = central_moments(xs)
    assert moments[1] == pytest.approx(m2, rel=1e-9)
    assert moments[2] == pytest.approx(m3, rel=1e-9, abs=1e-9)
    assert moments[3] == pytest.approx(m4, rel=1e-9)
    assert skewness(xs) == pytest.approx(m3 / m2 ** 1.5, rel=1e-9,
                                         abs=1e-9)


def test_standard_errors():
    assert standard_errors(32) == (0.1875, 0.75)
    assert standard_errors(6) == (1, 4)
    se_skew, se_kurt = standard_errors(131072)
    assert round(se_skew, 5) == 0.00005
    assert round(se_kurt, 5) == 0.00018
    assert standard_errors(24, conventional=True) == (0.5, 1.0)
    with pytest.raises(AggregationError):
        standard_errors(0)


def test_describe():
    row = describe([2, 0, 0, -2, 0, 2], 2)
    assert row.n == 6
    assert row.distinct == 3
    assert row.se_skew == 1
    assert row.excess_kurtosis >= -2
    assert list(row.as_dict()) == ['ticks_per_day', 'days', 'distinct',
                                   'skewness', 'excess_kurtosis', 'se_skew',
                                   'se_kurt']


def test_summary_table_divisibility():
    with pytest.raises(AggregationError):
        summary_table(RULE54, 10, 1000, [32])


def test_summary_table_short():
    rows = summary_table(RULE54, 14, 2 ** 16, [32, 256, 2048])
    for row in rows:
        assert row.n * row.ticks_per_day == 2 ** 16
        assert row.distinct <= min(row.ticks_per_day + 1, row.n)


@pytest.mark.slow
def test_table2():
    rows = summary_table(RULE54, 22)
    assert [row.ticks_per_day for row in rows] == list(TABLE_DAY_LENGTHS)
    for row, (length, distinct, skew, kurt) in zip(rows, TABLE2):
        assert row.ticks_per_day == length
        assert row.n == 2 ** 22 // length
        assert row.distinct == distinct
        assert row.skewness == pytest.approx(skew, abs=0.05)
        assert row.excess_kurtosis == pytest.approx(kurt, abs=0.05)
        assert (row.se_skew, row.se_kurt) == (6 / row.n, 24 / row.n)
        assert row.skewness < 0
        assert row.excess_kurtosis > 0


def test_moving_average():
    series = np.arange(2 ** 14)
    averages = moving_average(series)
    assert len(averages) == 128
    assert averages[0] == pytest.approx(63.5)
    assert moving_average(np.full(1000, 7), 10, 3).tolist() \
        == [7.0] * 331
    with pytest.raises(AggregationError):
        moving_average(np.ones(10), 20)
    with pytest.raises(AggregationError):
        moving_average(np.ones(10), 5, 0)


def test_histogram():
    hist = histogram(np.full(100, 1.0))
    assert len(hist.bin_edges) == 101
    assert hist.counts.sum() == 100
    assert np.count_nonzero(hist.counts) == 1

    hist = histogram(np.arange(100))
    assert hist.counts.tolist() == [1] * 100
    assert np.all(np.diff(hist.bin_edges) > 0)
    assert hist.frequencies.sum() == pytest.approx(1.0)
    with pytest.raises(AggregationError):
        histogram([])


def test_moving_average_histogram():
    hist = moving_average_histogram(RULE54, 14)
    assert hist.counts.sum() == 2 ** 7
    rows = list(hist.rows())
    assert len(rows) == 100
    assert rows[0][0] == hist.bin_edges[0]


@pytest.mark.slow
def test_moving_average_skew():
    changes = generate_series(RULE54, 18, 2 ** 18).changes
    assert skewness(moving_average(changes)) < 0


def test_random_walk_reproducible():
    a = random_walk_baseline(1000, seed=42)
    b = random_walk_baseline(1000, seed=42)
    assert np.array_equal(a.changes, b.changes)
    assert set(a.changes.tolist()) == {-1, 1}
    assert not np.array_equal(a.changes,
                              random_walk_baseline(1000, seed=43).changes)
    with pytest.raises(AggregationError):
        random_walk_baseline(0)


def test_random_walk_is_normal():
    walk = random_walk_baseline(2 ** 22, seed=0)
    row = series_summary(walk.changes, [4096], conventional_se=True)[0]
    assert abs(row.skewness) < 5 * row.se_skew
    assert abs(row.excess_kurtosis) < 5 * row.se_kurt
