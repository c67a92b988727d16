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
    This module contains the market dynamics of the representative
    investor: the feedback loop that turns each decision into the next
    market movement, the price series it generates and the cycle
    structure of the induced map on history words.

    Because there are only ``k**w`` distinct histories, every orbit ends
    in a cycle. The cycle length (period) measures complexity: a rule is
    complex for a lookback ``w`` if its period exceeds half of the
    ``k**w`` possible histories, and maximally complex if it visits all
    of them.
"""

import functools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Tuple

import numpy as np

from . import kernels
from .automaton import (RuleSpec, TransitionTable, decide, decode_rule,
                        action_values, mildest_buy_symbol)
from .ifamusererror import IfamUserError, HistoryError, ResourceGuardError

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

GUARD_LIMIT = 2 ** 32
DENSE_LIMIT = 2 ** 26
SHORT_LOOKBACK = 5

_DOWN_UP = 'DU'


class SimulationError(IfamUserError):
    """
    Invalid simulation length
    """
    pass


class Complexity(Enum):
    """
    Complexity class of a rule for a given lookback window.
    """
    SIMPLE = 'Simple'
    COMPLEX = 'Complex'
    MAXIMALLY_COMPLEX = 'MaximallyComplex'

    def __str__(self):
        return self.value

    @property
    def is_complex(self):
        return self != Complexity.SIMPLE


@dataclass(frozen=True)
class HistoryWord:
    """
        The last ``w`` market movements, most recent first.
    """
    movements: Tuple[int, ...]
    k: int = 2

    def __post_init__(self):
        object.__setattr__(self, 'movements',
                           tuple(int(x) for x in self.movements))
        if not self.movements:
            raise HistoryError('A history word needs at least one movement')
        if any(not 0 <= x < self.k for x in self.movements):
            raise HistoryError(f'History {self.movements} contains symbols '
                               f'outside 0..{self.k - 1}')

    @property
    def w(self) -> int:
        return len(self.movements)

    def pack(self) -> int:
        packed = 0
        for symbol in reversed(self.movements):
            packed = packed * self.k + symbol
        return packed

    @classmethod
    def unpack(cls, packed: int, w: int, k: int = 2) -> 'HistoryWord':
        if w < 1 or not 0 <= packed < k ** w:
            raise HistoryError(f'Packed word {packed} invalid for w={w} '
                               f'k={k}')
        movements = []
        for _ in range(w):
            packed, symbol = divmod(packed, k)
            movements.append(symbol)
        return cls(tuple(movements), k)

    @classmethod
    def from_string(cls, text: str, k: int = 2) -> 'HistoryWord':
        """
            Parses an oldest-first history: ``U``/``D`` for two symbols,
            one digit (``0-9a-z``) per movement otherwise.
        """
        try:
            if k == 2:
                oldest_first = [_DOWN_UP.index(c) for c in text.upper()]
            else:
                oldest_first = [int(c, 36) for c in text]
        except ValueError:
            raise HistoryError(f'Cannot parse history "{text}" for k={k}')
        return cls(tuple(reversed(oldest_first)), k)

    def to_string(self) -> str:
        if self.k == 2:
            return ''.join(_DOWN_UP[x] for x in self.oldest_first())
        return ''.join(np.base_repr(x, 36).lower()
                       for x in self.oldest_first())

    def oldest_first(self) -> Tuple[int, ...]:
        return self.movements[::-1]

    def as_array(self) -> np.ndarray:
        return np.array(self.movements, dtype=np.int64)

    def __str__(self):
        return self.to_string()


@dataclass(frozen=True)
class CycleResult:
    """
        Transient length and period of an orbit on the history words.
    """
    transient: int
    period: int
    complexity: Complexity
    max_period: int

    @property
    def pct_of_max(self) -> float:
        return self.period / self.max_period

    def __str__(self):
        return (f'period={self.period} transient={self.transient} '
                f'class={self.complexity} max={self.max_period}')


@dataclass(frozen=True, eq=False)
class Series:
    """
        Movements, price changes and prices of ``n`` consecutive ticks.
        Prices start from a zero baseline.
    """
    movements: np.ndarray
    changes: np.ndarray
    prices: np.ndarray

    def __len__(self):
        return len(self.movements)

    def rows(self) -> Iterator[Tuple[int, int, int, int]]:
        """
            Yields ``(tick, movement, change, price)`` with 1-based ticks.
        """
        for tick, row in enumerate(zip(self.movements.tolist(),
                                       self.changes.tolist(),
                                       self.prices.tolist()), start=1):
            yield (tick,) + row

    @classmethod
    def from_movements(cls, movements, k: int, b: int = 2) -> 'Series':
        movements = np.asarray(movements, dtype=np.int64)
        changes = np.asarray(action_values(k, b), dtype=np.int64)[movements]
        return cls(movements, changes, np.cumsum(changes))


@dataclass(frozen=True, eq=False)
class TransitionGraph:
    """
        The functional graph of the induced map: word ``i`` moves to
        ``successors[i]`` by emitting ``emitted[i]``.
    """
    k: int
    w: int
    emitted: np.ndarray
    successors: np.ndarray

    def __len__(self):
        return len(self.successors)

    def edges(self) -> Iterator[Tuple[int, int, int]]:
        return zip(range(len(self)), self.successors.tolist(),
                   self.emitted.tolist())


@dataclass(frozen=True)
class Attractor:
    """
        One cycle of a transition graph with the number of words draining
        into it (cycle members included).
    """
    period: int
    basin: int
    smallest_word: int


def history_space(k: int, w: int) -> int:
    """
        Returns ``k**w`` or raises if the history space is too large to
        be enumerated.
    """
    if w < 1:
        raise HistoryError(f'Lookback window must be at least 1, got w={w}')
    size = k ** w
    if size > GUARD_LIMIT:
        raise ResourceGuardError(size, GUARD_LIMIT)
    return size


@functools.lru_cache(maxsize=None)
def _advise_short_lookback(w):
    logging.warning('Lookback w=%d is below %d: complexity results may be '
                    'degenerate', w, SHORT_LOOKBACK)


def classify(result, k: int, w: int) -> Complexity:
    """
        Classifies a period (or a :class:`CycleResult`) for ``k`` symbols
        and lookback ``w``. Complex means strictly more than ``k**w / 2``.
        A single action can only trend and is never complex.
    """
    period = getattr(result, 'period', result)
    if w < SHORT_LOOKBACK:
        _advise_short_lookback(w)
    size = k ** w
    if k < 2:
        return Complexity.SIMPLE
    if period == size:
        return Complexity.MAXIMALLY_COMPLEX
    if 2 * period > size:
        return Complexity.COMPLEX
    return Complexity.SIMPLE


def init_history(w: int, k: int = 2, override=None) -> HistoryWord:
    """
        Returns the initial history: ``w`` mildest buys (all UP for two
        symbols) unless ``override`` (a word or an oldest-first string)
        is given.
    """
    if w < 1:
        raise HistoryError(f'Lookback window must be at least 1, got w={w}')
    if override is None:
        return HistoryWord((mildest_buy_symbol(k),) * w, k)
    if isinstance(override, str):
        override = HistoryWord.from_string(override, k)
    if override.w != w or override.k != k:
        raise HistoryError(f'Initial history "{override}" does not match '
                           f'w={w} k={k}')
    return override


def advance(table: TransitionTable,
            window: HistoryWord) -> Tuple[HistoryWord, int]:
    """
        Lets the investor trade once: returns the shifted window and the
        emitted movement.
    """
    emitted = decide(table, window)
    return HistoryWord((emitted,) + window.movements[:-1], window.k), emitted


def _resolve_init(spec: RuleSpec, w: int, init) -> HistoryWord:
    return init_history(w, spec.k, init)


def generate_series(spec: RuleSpec, w: int, n_ticks: int,
                    init: Optional[HistoryWord] = None) -> Series:
    """
        Simulates ``n_ticks`` trading days of rule ``spec`` with lookback
        ``w``, starting from ``init`` (all UP by default).
    """
    if n_ticks < 1:
        raise SimulationError(f'Need at least one tick, got {n_ticks}')
    window = _resolve_init(spec, w, init)
    next_states, outputs = decode_rule(spec).arrays
    movements = kernels.emit_symbols(next_states, outputs,
                                     window.as_array(), n_ticks)
    return Series.from_movements(movements, spec.k, spec.b)


def cycle_of(table: TransitionTable, w: int, init: HistoryWord) -> CycleResult:
    """
        Measures transient and period of the orbit of ``init`` under an
        already decoded table.
    """
    size = history_space(table.k, w)
    next_states, outputs = table.arrays
    orbit = kernels.orbit_dense if size <= DENSE_LIMIT \
        else kernels.orbit_hashed
    transient, period = orbit(next_states, outputs, table.k, w, size,
                              init.pack())
    transient, period = int(transient), int(period)
    return CycleResult(transient, period, classify(period, table.k, w), size)


def find_cycle(spec: RuleSpec, w: int,
               init: Optional[HistoryWord] = None) -> CycleResult:
    """
        Returns transient, period and complexity of rule ``spec`` with
        lookback ``w`` starting from ``init`` (all UP by default).
    """
    history_space(spec.k, w)
    window = _resolve_init(spec, w, init)
    result = cycle_of(decode_rule(spec), w, window)
    logging.debug('%s w=%d: %s', spec, w, result)
    return result


def transition_graph(spec: RuleSpec, w: int) -> TransitionGraph:
    """
        Returns the transition graph over all ``k**w`` packed words.
    """
    size = history_space(spec.k, w)
    next_states, outputs = decode_rule(spec).arrays
    emitted, following = kernels.successors(next_states, outputs,
                                            spec.k, w, size)
    return TransitionGraph(spec.k, w, emitted, following)


def attractors(spec: RuleSpec, w: int):
    """
        Returns all cycles of the transition graph, ordered by their
        smallest member word.
    """
    graph = transition_graph(spec, w)
    on_cycle, basin, n_cycles = kernels.label_cycles(graph.successors)
    n_cycles = int(n_cycles)
    members = on_cycle >= 0
    periods = np.bincount(on_cycle[members], minlength=n_cycles)
    basins = np.bincount(basin, minlength=n_cycles)
    smallest = np.full(n_cycles, len(graph), dtype=np.int64)
    np.minimum.at(smallest, on_cycle[members], np.flatnonzero(members))
    found = [Attractor(int(p), int(b), int(m))
             for p, b, m in zip(periods, basins, smallest)]
    return sorted(found, key=lambda a: a.smallest_word)


def cycle_words(spec: RuleSpec, w: int,
                init: Optional[HistoryWord] = None) -> np.ndarray:
    """
        Returns the sorted packed words of the cycle reached from
        ``init`` (all UP by default).
    """
    window = _resolve_init(spec, w, init)
    graph = transition_graph(spec, w)
    on_cycle, basin, _ = kernels.label_cycles(graph.successors)
    return np.flatnonzero(on_cycle == basin[window.pack()])
