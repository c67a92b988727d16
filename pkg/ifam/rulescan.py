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
    This module enumerates whole rule spaces and classifies the
    complexity of every rule.

    Scans are split into contiguous chunks of rule numbers. With more than
    one worker the chunks are executed in a process pool and gathered in
    submission order, so the merged catalog never depends on the order in
    which workers finish.
"""

import asyncio
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

from .automaton import RuleSpec, decode_rule, canonical_rule, rule_count
from .dynamics import (Complexity, HistoryWord, cycle_of, find_cycle,
                       generate_series, history_space, init_history)
from .ifamusererror import IfamUserError

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

CATALOG_FIELDS = ('s', 'k', 'w', 'rule', 'period', 'transient', 'class',
                  'pct_of_max')


class ScanRangeError(IfamUserError):
    """
    Invalid rule range or lookback range for a scan
    """
    pass


@dataclass(frozen=True)
class RuleCatalogRow:
    """
        Period and complexity of one rule for one lookback window.
    """
    s: int
    k: int
    w: int
    rule: int
    period: int
    transient: int
    complexity: Complexity

    @property
    def pct_of_max(self) -> float:
        return self.period / self.k ** self.w

    def as_dict(self):
        return {
            's': self.s,
            'k': self.k,
            'w': self.w,
            'rule': self.rule,
            'period': self.period,
            'transient': self.transient,
            'class': str(self.complexity),
            'pct_of_max': self.pct_of_max,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(int(data['s']), int(data['k']), int(data['w']),
                   int(data['rule']), int(data['period']),
                   int(data['transient']), Complexity(data['class']))


@dataclass
class ScanSummary:
    """
        Class counts of a scan plus its complex rules. Relabeled copies
        of the same automaton are counted once in ``deduplicated_complex``.
    """
    counts: Dict[Complexity, int]
    complex_rules: List[int]
    deduplicated_complex: int
    total: int = field(init=False)

    def __post_init__(self):
        self.total = sum(self.counts.values())

    @property
    def complex_count(self) -> int:
        return len(self.complex_rules)


def _row(spec: RuleSpec, w: int, result) -> RuleCatalogRow:
    return RuleCatalogRow(spec.s, spec.k, w, spec.m, result.period,
                          result.transient, result.complexity)


def _scan_chunk(s, k, w, b, start, stop, init) -> List[RuleCatalogRow]:
    rows = []
    for m in range(start, stop):
        spec = RuleSpec(s, k, m, b)
        rows.append(_row(spec, w, cycle_of(decode_rule(spec), w, init)))
    return rows


def _partition(rules: range, workers: int) -> List[range]:
    """
        Splits ``rules`` into at most ``workers`` contiguous chunks.
    """
    chunk = -(-len(rules) // max(workers, 1)) or 1
    return [rules[i:i + chunk] for i in range(0, len(rules), chunk)]


async def _scan_async(chunks, workers, s, k, w, b, init):
    """
        Runs all chunks in a process pool. ``gather`` returns the results
        in submission order.
    """
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        tasks = [loop.run_in_executor(pool, _scan_chunk, s, k, w, b,
                                      chunk.start, chunk.stop, init)
                 for chunk in chunks]
        return await asyncio.gather(*tasks)


def scan_rules(s: int, k: int, w: int, rule_range: Optional[range] = None,
               b: int = 2, workers: int = 1,
               init: Optional[HistoryWord] = None) -> List[RuleCatalogRow]:
    """
        Classifies every rule of ``rule_range`` (all ``(s*k)**(s*k)``
        rules by default) for lookback ``w``, starting from all UP.
        Rows are ordered by rule number.
    """
    count = rule_count(s, k)
    rules = range(count) if rule_range is None else rule_range
    if rules.step != 1:
        raise ScanRangeError('Rule ranges must be contiguous')
    if len(rules) and not (0 <= rules.start and rules.stop <= count):
        raise ScanRangeError(f'Rule range {rules.start}..{rules.stop - 1} '
                             f'outside 0..{count - 1} for s={s} k={k}')
    history_space(k, w)
    init = init_history(w, k, init)

    logging.info('Scanning %d rules (s=%d, k=%d, w=%d) with %d worker(s)',
                 len(rules), s, k, w, workers)
    chunks = _partition(rules, workers)
    if workers <= 1 or len(chunks) <= 1:
        parts = [_scan_chunk(s, k, w, b, c.start, c.stop, init)
                 for c in chunks]
    else:
        parts = asyncio.run(_scan_async(chunks, workers, s, k, w, b, init))
    return [row for part in parts for row in part]


def scan_windows(m: int, s: int, k: int, w_min: int, w_max: int,
                 b: int = 2) -> List[RuleCatalogRow]:
    """
        Measures the period of a single rule for every lookback in
        ``w_min..w_max``.
    """
    if w_min < 1 or w_min > w_max:
        raise ScanRangeError(f'Invalid lookback range {w_min}..{w_max}')
    spec = RuleSpec(s, k, m, b)
    rows = []
    for w in range(w_min, w_max + 1):
        row = _row(spec, w, find_cycle(spec, w))
        logging.info('%s w=%d: period %d of %d (%s)', spec, w, row.period,
                     k ** w, row.complexity)
        rows.append(row)
    return rows


def summarize_scan(rows: Sequence[RuleCatalogRow]) -> ScanSummary:
    """
        Counts the rows per complexity class and lists the complex rules.
    """
    if not rows:
        raise ScanRangeError('Cannot summarize an empty scan')
    counts = Counter(row.complexity for row in rows)
    complex_rows = [row for row in rows if row.complexity.is_complex]
    complex_rules = sorted({row.rule for row in complex_rows})
    classes = {(row.s, row.k, canonical_rule(row.rule, row.s, row.k))
               for row in complex_rows}
    return ScanSummary({c: counts.get(c, 0) for c in Complexity},
                       complex_rules, len(classes))


def complex_sets_by_window(s: int, k: int, windows: Iterable[int],
                           b: int = 2, workers: int = 1):
    """
        Returns ``{w: sorted complex rules}`` for every lookback in
        ``windows``.
    """
    return {w: summarize_scan(scan_rules(s, k, w, b=b,
                                         workers=workers)).complex_rules
            for w in windows}


def complex_gallery(s: int, k: int, w: int, limit: int = 50,
                    n_ticks: Optional[int] = None, b: int = 2,
                    workers: int = 1):
    """
        Returns ``[(rule, prices)]`` for the first ``limit`` complex rules
        of a scan, each simulated for ``n_ticks`` (default ``k**w``).
    """
    n_ticks = n_ticks or k ** w
    rows = scan_rules(s, k, w, b=b, workers=workers)
    rules = [row.rule for row in rows if row.complexity.is_complex][:limit]
    return [(m, generate_series(RuleSpec(s, k, m, b), w, n_ticks).prices)
            for m in rules]
