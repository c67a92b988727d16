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

import pytest

from ifam import rulescan
from ifam.automaton import relabel_equivalent
from ifam.dynamics import Complexity
from ifam.rulescan import (RuleCatalogRow, ScanRangeError, complex_gallery,
                           complex_sets_by_window, scan_rules, scan_windows,
                           summarize_scan)

TABLE1_PERIODS = (21, 63, 127, 63, 73, 889, 1533, 3255, 7905, 11811, 32767,
                  255, 273)


def test_scan_windows_table1():
    rows = scan_windows(54, 2, 2, 5, 17)
    assert tuple(row.period for row in rows) == TABLE1_PERIODS
    simple = [row.w for row in rows
              if row.complexity == Complexity.SIMPLE]
    assert simple == [8, 9, 16, 17]
    for row in rows:
        assert row.pct_of_max == row.period / 2 ** row.w


def test_scan_windows_always_sell():
    rows = scan_windows(0, 2, 2, 5, 9)
    assert [row.period for row in rows] == [1] * 5


def test_scan_windows_invalid_range():
    with pytest.raises(ScanRangeError):
        scan_windows(54, 2, 2, 9, 5)
    with pytest.raises(ScanRangeError):
        scan_windows(54, 2, 2, 0, 5)


def test_scan_rules_order_and_range():
    rows = scan_rules(2, 2, 6, range(50, 60))
    assert [row.rule for row in rows] == list(range(50, 60))
    with pytest.raises(ScanRangeError):
        scan_rules(2, 2, 6, range(250, 260))
    with pytest.raises(ScanRangeError):
        scan_rules(2, 2, 6, range(0, 10, 2))


def test_partition():
    chunks = rulescan._partition(range(10), 3)
    assert [list(c) for c in chunks] == [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9]]
    assert rulescan._partition(range(0), 4) == []
    assert len(rulescan._partition(range(5), 8)) == 5


@pytest.mark.parametrize('workers', [2, 8])
def test_partition_determinism(workers):
    single = scan_rules(2, 2, 7)
    assert scan_rules(2, 2, 7, workers=workers) == single


@pytest.mark.parametrize('w', [5, 6, 7, 10, 11, 12])
def test_two_state_complex_set(w):
    summary = summarize_scan(scan_rules(2, 2, w))
    assert summary.complex_rules == [54, 201]
    assert summary.deduplicated_complex == 1
    assert summary.total == 256


@pytest.mark.slow
@pytest.mark.parametrize('w', [13, 14, 15])
def test_two_state_complex_set_long(w):
    assert summarize_scan(scan_rules(2, 2, w)).complex_rules == [54, 201]


@pytest.mark.slow
def test_three_state_count():
    summary = summarize_scan(scan_rules(3, 2, 9, workers=2))
    assert summary.complex_count == 270
    assert summary.total == 46656
    assert summary.deduplicated_complex <= 270


@pytest.mark.parametrize('s, k', [(1, 2), (1, 3), (2, 1), (3, 1)])
def test_no_complexity_without_memory_or_choice(s, k):
    summary = summarize_scan(scan_rules(s, k, 6))
    assert summary.complex_count == 0


def test_relabeling_closure():
    complex_rules = summarize_scan(scan_rules(2, 2, 6)).complex_rules
    for m in complex_rules:
        partners = [n for n in range(256)
                    if relabel_equivalent(m, n, 2, 2)]
        assert set(partners) <= set(complex_rules)


def test_summarize_single_row():
    row = RuleCatalogRow(2, 2, 5, 0, 1, 0, Complexity.SIMPLE)
    summary = summarize_scan([row])
    assert summary.counts == {Complexity.SIMPLE: 1, Complexity.COMPLEX: 0,
                              Complexity.MAXIMALLY_COMPLEX: 0}
    assert summary.complex_rules == []


def test_summarize_empty():
    with pytest.raises(ScanRangeError):
        summarize_scan([])


def test_catalog_row_dict():
    row = RuleCatalogRow(2, 2, 5, 54, 21, 3, Complexity.COMPLEX)
    data = row.as_dict()
    assert list(data) == list(rulescan.CATALOG_FIELDS)
    assert data['class'] == 'Complex'
    assert data['pct_of_max'] == 21 / 32
    assert RuleCatalogRow.from_dict(data) == row


def test_complex_sets_by_window():
    sets = complex_sets_by_window(2, 2, [5, 6])
    assert sets == {5: [54, 201], 6: [54, 201]}


def test_complex_gallery():
    gallery = complex_gallery(2, 2, 6, limit=5, n_ticks=20)
    assert [rule for rule, _ in gallery] == [54, 201]
    for _, prices in gallery:
        assert len(prices) == 20
    assert (gallery[0][1] == gallery[1][1]).all()
