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
"""
    This module contains the distributional statistics of generated tick
    series: aggregation into days, population skewness and excess
    kurtosis with their standard errors, moving-average histograms and a
    seeded random-walk baseline to compare against.

    Moments are population (biased) central moments. Standard errors
    default to ``6/d`` and ``24/d`` for ``d`` days; the conventional
    ``sqrt(6/d)`` and ``sqrt(24/d)`` are available on request.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .automaton import RuleSpec
from .dynamics import HistoryWord, Series, generate_series
from .ifamusererror import AggregationError, UndefinedMomentError

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

TABLE_TICKS = 2 ** 22
TABLE_DAY_LENGTHS = tuple(32 * 2 ** i for i in range(13))
MA_WINDOW = 128
HISTOGRAM_BINS = 100
SUMMARY_FIELDS = ('ticks_per_day', 'days', 'distinct', 'skewness',
                  'excess_kurtosis', 'se_skew', 'se_kurt')
HISTOGRAM_FIELDS = ('left', 'right', 'count', 'frequency')


@dataclass(frozen=True)
class SeriesStats:
    """
        Distribution summary of ``n`` daily values.
    """
    ticks_per_day: int
    n: int
    distinct: int
    skewness: float
    excess_kurtosis: float
    se_skew: float
    se_kurt: float

    def as_dict(self):
        return {
            'ticks_per_day': self.ticks_per_day,
            'days': self.n,
            'distinct': self.distinct,
            'skewness': self.skewness,
            'excess_kurtosis': self.excess_kurtosis,
            'se_skew': self.se_skew,
            'se_kurt': self.se_kurt,
        }


@dataclass(frozen=True, eq=False)
class Histogram:
    """
        Equal-width histogram: ``len(bin_edges) == len(counts) + 1``.
    """
    bin_edges: np.ndarray
    counts: np.ndarray

    @property
    def frequencies(self) -> np.ndarray:
        return self.counts / self.counts.sum()

    def rows(self):
        """
            Yields ``(left, right, count, frequency)`` per bin.
        """
        return zip(self.bin_edges[:-1].tolist(), self.bin_edges[1:].tolist(),
                   self.counts.tolist(), self.frequencies.tolist())


def aggregate_days(ticks, ticks_per_day: int,
                   truncate: bool = False) -> np.ndarray:
    """
        Sums consecutive, non-overlapping blocks of ``ticks_per_day``
        ticks. A trailing partial day is an error unless ``truncate``.
    """
    ticks = np.asarray(ticks, dtype=np.int64)
    if ticks_per_day < 1:
        raise AggregationError(f'Need at least one tick per day, got '
                               f'{ticks_per_day}')
    days, rest = divmod(len(ticks), ticks_per_day)
    if rest and not truncate:
        raise AggregationError(f'{len(ticks)} ticks cannot be split into '
                               f'days of {ticks_per_day} ticks')
    return ticks[:days * ticks_per_day].reshape(days, ticks_per_day) \
        .sum(axis=1)


def central_moments(xs) -> Tuple[float, float, float, float]:
    """
        Returns the mean and the second to fourth population central
        moments, computed in two passes.
    """
    xs = np.asarray(xs, dtype=np.float64)
    if len(xs) == 0:
        raise AggregationError('Cannot compute moments of an empty series')
    mean = xs.mean()
    dev = xs - mean
    dev2 = dev * dev
    return (float(mean), float(dev2.mean()), float((dev2 * dev).mean()),
            float((dev2 * dev2).mean()))


def _standardized(xs):
    xs = np.asarray(xs)
    _, m2, m3, m4 = central_moments(xs)
    if m2 == 0.0 or np.ptp(xs) == 0:
        raise UndefinedMomentError(len(xs))
    return m2, m3, m4


def skewness(xs) -> float:
    m2, m3, _ = _standardized(xs)
    return m3 / m2 ** 1.5


def excess_kurtosis(xs) -> float:
    m2, _, m4 = _standardized(xs)
    return m4 / m2 ** 2 - 3.0


def standard_errors(d: int, conventional: bool = False) \
        -> Tuple[float, float]:
    """
        Returns the standard errors of skewness and excess kurtosis for
        ``d`` observations: ``(6/d, 24/d)``, or their square roots if
        ``conventional`` is set.
    """
    if d < 1:
        raise AggregationError(f'Need at least one observation, got d={d}')
    if conventional:
        return (6 / d) ** 0.5, (24 / d) ** 0.5
    return 6 / d, 24 / d


def describe(daily, ticks_per_day: int,
             conventional_se: bool = False) -> SeriesStats:
    daily = np.asarray(daily)
    m2, m3, m4 = _standardized(daily)
    se_skew, se_kurt = standard_errors(len(daily), conventional_se)
    return SeriesStats(ticks_per_day, len(daily), len(np.unique(daily)),
                       m3 / m2 ** 1.5, m4 / m2 ** 2 - 3.0, se_skew, se_kurt)


def series_summary(changes, day_lengths: Sequence[int],
                   conventional_se: bool = False) -> List[SeriesStats]:
    """
        Summarizes one tick series for several day lengths.
    """
    rows = []
    for length in day_lengths:
        daily = aggregate_days(changes, length)
        row = describe(daily, length, conventional_se)
        logging.debug('%d ticks/day: skew=%.4f kurt=%.4f distinct=%d',
                      length, row.skewness, row.excess_kurtosis,
                      row.distinct)
        rows.append(row)
    return rows


def summary_table(spec: RuleSpec, w: int, total_ticks: int = TABLE_TICKS,
                  day_lengths: Sequence[int] = TABLE_DAY_LENGTHS,
                  init: Optional[HistoryWord] = None,
                  conventional_se: bool = False) -> List[SeriesStats]:
    """
        Generates ``total_ticks`` ticks of ``spec`` and summarizes the
        daily distribution for every entry of ``day_lengths``.
    """
    for length in day_lengths:
        if length < 1 or total_ticks % length:
            raise AggregationError(f'Day length {length} does not divide '
                                   f'{total_ticks} ticks')
    series = generate_series(spec, w, total_ticks, init)
    return series_summary(series.changes, day_lengths, conventional_se)


def moving_average(series, window_len: int = MA_WINDOW,
                   stride: int = MA_WINDOW) -> np.ndarray:
    """
        Averages windows of ``window_len`` values starting at every
        multiple of ``stride``.
    """
    values = np.asarray(series, dtype=np.float64)
    if window_len < 1 or stride < 1:
        raise AggregationError('Window length and stride must be positive')
    if len(values) < window_len:
        raise AggregationError(f'Series of {len(values)} values is shorter '
                               f'than the window of {window_len}')
    sums = np.concatenate(([0.0], np.cumsum(values)))
    starts = np.arange(0, len(values) - window_len + 1, stride)
    return (sums[starts + window_len] - sums[starts]) / window_len


def histogram(values, bins: int = HISTOGRAM_BINS) -> Histogram:
    """
        Equal-width histogram over ``[min, max]``; the maximum falls into
        the last bin. A constant input gets a unit-width range around it.
    """
    values = np.asarray(values, dtype=np.float64)
    if len(values) == 0:
        raise AggregationError('Cannot build a histogram of no values')
    lo, hi = float(values.min()), float(values.max())
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    counts, edges = np.histogram(values, bins=bins, range=(lo, hi))
    return Histogram(edges, counts)


def moving_average_histogram(spec: RuleSpec, w: int,
                             window_len: int = MA_WINDOW,
                             stride: int = MA_WINDOW,
                             bins: int = HISTOGRAM_BINS) -> Histogram:
    """
        Histogram of the moving averages of the first ``k**w`` price
        changes, i.e. ``k**w / stride`` averages for the defaults.
    """
    series = generate_series(spec, w, spec.k ** w)
    return histogram(moving_average(series.changes, window_len, stride),
                     bins)


def random_walk_baseline(n_ticks: int, seed: int = 0) -> Series:
    """
        Independent, equiprobable +1/-1 ticks drawn from numpy's PCG64
        generator seeded with ``seed``.
    """
    if n_ticks < 1:
        raise AggregationError(f'Need at least one tick, got {n_ticks}')
    rng = np.random.Generator(np.random.PCG64(seed))
    movements = rng.integers(0, 2, size=n_ticks, dtype=np.int64)
    return Series.from_movements(movements, 2)
