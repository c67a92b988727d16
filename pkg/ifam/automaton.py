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
    This module implements the decision machine of the representative
    investor.

    An investor with ``s`` mental states and ``k`` actions is a transducer
    (Mealy machine) numbered like Wolfram's iterated finite automata: the
    rule number ``m`` is written as ``s*k`` digits in base ``s*k`` and every
    digit encodes the next state and the output symbol of one edge. Input
    and output symbols share one alphabet: symbol ``x`` is both a market
    movement and the action that produced it, ordered from the strongest
    sell (``0``) to the strongest buy (``k-1``).

    Each day the investor starts in state 1, walks the lookback window
    from the most recent movement back to the oldest one and acts on the
    output of the last edge it followed.
"""

import functools
import itertools
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Tuple

import numpy as np

from .ifamusererror import (RuleSpecError, MalformedTableError,
                            SymbolRangeError, HistoryError)

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

DOWN = SELL = 0
UP = BUY = 1

STRUCTURAL = 'structural'
PINNED = 'pinned'


def rule_count(s: int, k: int) -> int:
    """
        Returns the number of distinct ``s``-state, ``k``-symbol rules.
    """
    return (s * k) ** (s * k)


@dataclass(frozen=True)
class RuleSpec:
    """
        Identifies a transducer by its dimensions and its rule number.
        The action base ``b`` is only evaluated for ``k >= 4``.
    """
    s: int
    k: int
    m: int
    b: int = 2

    def __post_init__(self):
        if self.s < 1 or self.k < 1:
            raise RuleSpecError('An automaton needs at least one state and '
                                f'one symbol, got s={self.s} k={self.k}')
        count = rule_count(self.s, self.k)
        if not 0 <= self.m < count:
            raise RuleSpecError(f'Rule {self.m} out of range for '
                                f's={self.s} k={self.k} '
                                f'(0 <= m < {count})')
        if self.k >= 4 and self.b < 2:
            raise RuleSpecError(f'Action base must be at least 2 for '
                                f'k={self.k}, got b={self.b}')

    def __str__(self):
        return f'rule {self.m} (s={self.s}, k={self.k})'


@dataclass(frozen=True)
class TransitionTable:
    """
        Total transition map of a transducer. ``rows[q - 1][x]`` holds the
        pair ``(next_state, output)`` for state ``q`` reading symbol ``x``.
        States are 1-based, symbols 0-based.
    """
    s: int
    k: int
    rows: Tuple[Tuple[Tuple[int, int], ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.s \
                or any(len(row) != self.k for row in self.rows):
            raise MalformedTableError(f'Table must have {self.s * self.k} '
                                      'entries, one per (state, input)')
        for row in self.rows:
            for (nxt, out) in row:
                if not 1 <= nxt <= self.s:
                    raise MalformedTableError(f'Next state {nxt} outside '
                                              f'1..{self.s}')
                if not 0 <= out < self.k:
                    raise MalformedTableError(f'Output {out} outside '
                                              f'0..{self.k - 1}')

    @classmethod
    def from_mapping(cls, mapping, s, k):
        """
            Builds a table from a ``{(state, input): (next, output)}``
            mapping, rejecting missing, duplicate or out-of-range entries.
        """
        if not isinstance(mapping, Mapping):
            pairs = list(mapping)
            keys = [key for key, _ in pairs]
            if len(set(keys)) != len(keys):
                raise MalformedTableError('Duplicate (state, input) entry')
            mapping = dict(pairs)
        expected = {(q, x) for q in range(1, s + 1) for x in range(k)}
        if set(mapping) != expected:
            missing = sorted(expected - set(mapping))
            extra = sorted(set(mapping) - expected)
            raise MalformedTableError(f'Table is not total: missing {missing}'
                                      f', unexpected {extra}')
        rows = tuple(tuple(tuple(mapping[(q, x)]) for x in range(k))
                     for q in range(1, s + 1))
        return cls(s, k, rows)

    def lookup(self, state: int, symbol: int) -> Tuple[int, int]:
        return self.rows[state - 1][symbol]

    def items(self) -> Iterator[Tuple[Tuple[int, int], Tuple[int, int]]]:
        """
            Yields all edges in numbering order: states ascending, input
            symbols descending.
        """
        for q in range(1, self.s + 1):
            for x in reversed(range(self.k)):
                yield (q, x), self.lookup(q, x)

    def as_dict(self):
        return dict(self.items())

    def format_rules(self) -> str:
        """
            Renders the table as ``{{1,1} -> {1,0}, ...}``.
        """
        edges = [f'{{{q},{x}}} -> {{{nxt},{out}}}'
                 for (q, x), (nxt, out) in self.items()]
        return '{' + ', '.join(edges) + '}'

    @cached_property
    def arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """
            The table as two ``s x k`` int64 arrays (next state, output)
            with 0-based states, as consumed by :mod:`ifam.kernels`.
        """
        next_states = np.array([[nxt - 1 for (nxt, _) in row]
                                for row in self.rows], dtype=np.int64)
        outputs = np.array([[out for (_, out) in row]
                            for row in self.rows], dtype=np.int64)
        return next_states, outputs


def _digits(value: int, base: int, length: int):
    digits = []
    for _ in range(length):
        value, digit = divmod(value, base)
        digits.append(digit)
    return digits[::-1]


def decode_rule(spec: RuleSpec) -> TransitionTable:
    """
        Decodes the rule number of ``spec`` into its transition table.

        The ``s*k`` base-``s*k`` digits of ``m`` (most significant first)
        are split into ``s`` groups of ``k``. Digit ``j`` (1-based) of
        group ``i`` is the edge leaving state ``i`` on input ``k - j``.
    """
    s, k = spec.s, spec.k
    digits = _digits(spec.m, s * k, s * k)
    mapping = {}
    for i in range(s):
        for j, digit in enumerate(digits[i * k:(i + 1) * k], start=1):
            mapping[(i + 1, k - j)] = ((digit // k) % s + 1, digit % k)
    return TransitionTable.from_mapping(mapping, s, k)


def encode_rule(table, s=None, k=None) -> int:
    """
        Returns the rule number of ``table``, the inverse of
        :func:`decode_rule`. ``table`` may also be a plain mapping, in
        which case ``s`` and ``k`` are required.
    """
    if not isinstance(table, TransitionTable):
        if s is None or k is None:
            raise MalformedTableError('Dimensions s and k are required to '
                                      'encode a plain mapping')
        table = TransitionTable.from_mapping(table, s, k)
    elif (s is not None and s != table.s) or (k is not None and k != table.k):
        raise MalformedTableError(f'Table has s={table.s} k={table.k}, '
                                  f'expected s={s} k={k}')
    base = table.s * table.k
    m = 0
    for _, (nxt, out) in table.items():
        m = m * base + (nxt - 1) * table.k + out
    return m


def step(table: TransitionTable, state: int, symbol: int) -> Tuple[int, int]:
    """
        Follows the single edge leaving ``state`` on ``symbol``.
    """
    if not 1 <= state <= table.s:
        raise SymbolRangeError(f'State {state} outside 1..{table.s}')
    if not 0 <= symbol < table.k:
        raise SymbolRangeError(f'Symbol {symbol} outside 0..{table.k - 1}')
    return table.lookup(state, symbol)


def decide(table: TransitionTable, window) -> int:
    """
        Runs the daily decision procedure on ``window`` (a
        :class:`ifam.dynamics.HistoryWord` or a plain sequence, most
        recent movement first) and returns the desired action symbol.
    """
    movements = tuple(getattr(window, 'movements', window))
    if not movements:
        raise HistoryError('Cannot decide on an empty window')
    state, output = 1, None
    for symbol in movements:
        state, output = step(table, state, symbol)
    return output


def comparison_decision(window: Sequence[int]) -> int:
    """
        Closed form of rule 54: buy if the movements ``w`` and ``w-1``
        days ago differ, sell if they are the same.
    """
    movements = tuple(getattr(window, 'movements', window))
    if len(movements) < 2:
        raise HistoryError('The comparison needs a window of at least two '
                           'movements')
    return BUY if movements[-1] != movements[-2] else SELL


@functools.lru_cache(maxsize=None)
def action_values(k: int, b: int = 2) -> Tuple[int, ...]:
    """
        Returns the sorted action set: ``k // 2`` sells and buys with
        strengths ``b**0 .. b**(k//2 - 1)``, plus hold (0) for odd ``k``.
    """
    if k < 1:
        raise RuleSpecError(f'Need at least one action, got k={k}')
    if k >= 4 and b < 2:
        raise RuleSpecError(f'Action base must be at least 2, got b={b}')
    buys = [b ** i for i in range(k // 2)]
    sells = [-v for v in reversed(buys)]
    return tuple(sells + [0] * (k % 2) + buys)


def action_value(symbol: int, k: int, b: int = 2) -> int:
    """
        Returns the signed price change caused by action ``symbol``.
    """
    if not 0 <= symbol < k:
        raise SymbolRangeError(f'Symbol {symbol} outside 0..{k - 1}')
    return action_values(k, b)[symbol]


def mildest_buy_symbol(k: int) -> int:
    """
        Returns the symbol whose action value is +1 (0 if ``k == 1``).
    """
    if k < 1:
        raise RuleSpecError(f'Need at least one action, got k={k}')
    return 0 if k == 1 else k - k // 2


def relabel(table: TransitionTable, permutation) -> TransitionTable:
    """
        Renames state ``q`` to ``permutation[q - 1]``.
    """
    mapping = {(permutation[q - 1], x): (permutation[nxt - 1], out)
               for (q, x), (nxt, out) in table.items()}
    return TransitionTable.from_mapping(mapping, table.s, table.k)


def _relabelings(table: TransitionTable, pinned: bool):
    for permutation in itertools.permutations(range(1, table.s + 1)):
        if pinned and permutation[0] != 1:
            continue
        yield relabel(table, permutation)


def relabel_equivalent(m1: int, m2: int, s: int, k: int,
                       mode: str = STRUCTURAL) -> bool:
    """
        Tells whether rules ``m1`` and ``m2`` only differ by the labels of
        their states. In ``pinned`` mode state 1 must keep its label, so
        both rules also start their daily walk in the same state.
    """
    if mode not in (STRUCTURAL, PINNED):
        raise ValueError(f'Unknown relabeling mode "{mode}"')
    table = decode_rule(RuleSpec(s, k, m1))
    target = decode_rule(RuleSpec(s, k, m2))
    return any(t == target for t in _relabelings(table, mode == PINNED))


def canonical_rule(m: int, s: int, k: int) -> int:
    """
        Returns the smallest rule number among all relabelings of ``m``.
    """
    table = decode_rule(RuleSpec(s, k, m))
    return min(encode_rule(t) for t in _relabelings(table, pinned=False))
