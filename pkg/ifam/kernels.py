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
    Compiled inner loops of the market dynamics.

    History words are packed into integers: the symbol at window index
    ``i`` (index 0 is the most recent movement) is digit ``i`` in base
    ``k``. Appending a new movement ``e`` to a packed word ``p`` of a
    window with ``size = k**w`` words is ``(p * k) % size + e``.

    Transition tables are passed as the two 0-based ``s x k`` arrays
    returned by :attr:`ifam.automaton.TransitionTable.arrays`.
"""

import numpy as np
from numba import njit, types
from numba.typed import Dict

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


@njit(cache=True)
def decide_packed(next_states, outputs, packed, k, w):
    state = 0
    out = 0
    for _ in range(w):
        symbol = packed % k
        packed //= k
        out = outputs[state, symbol]
        state = next_states[state, symbol]
    return out


@njit(cache=True)
def emit_symbols(next_states, outputs, window, n):
    """
        Emits ``n`` movements starting from ``window`` (most recent
        first). Needs no enumeration of the history space.
    """
    w = window.shape[0]
    tape = np.empty(w + n, dtype=np.int64)
    for i in range(w):
        tape[i] = window[w - 1 - i]
    for t in range(n):
        state = 0
        out = 0
        newest = w - 1 + t
        for j in range(w):
            symbol = tape[newest - j]
            out = outputs[state, symbol]
            state = next_states[state, symbol]
        tape[w + t] = out
    return tape[w:]


@njit(cache=True)
def orbit_dense(next_states, outputs, k, w, size, start):
    """
        Walks the orbit of ``start`` recording the first visit of every
        word in a dense table. Returns ``(transient, period)``.
    """
    first_visit = np.full(size, -1, dtype=np.int32)
    word = start
    t = 0
    while first_visit[word] < 0:
        first_visit[word] = t
        word = (word * k) % size + decide_packed(next_states, outputs,
                                                 word, k, w)
        t += 1
    return first_visit[word], t - first_visit[word]


@njit(cache=True)
def orbit_hashed(next_states, outputs, k, w, size, start):
    """
        Same as :func:`orbit_dense` with a hash map for history spaces too
        large for a dense table.
    """
    first_visit = Dict.empty(key_type=types.int64, value_type=types.int64)
    word = start
    t = 0
    while word not in first_visit:
        first_visit[word] = t
        word = (word * k) % size + decide_packed(next_states, outputs,
                                                 word, k, w)
        t += 1
    return first_visit[word], t - first_visit[word]


@njit(cache=True)
def successors(next_states, outputs, k, w, size):
    """
        Returns the emitted symbol and the successor of every packed word.
    """
    emitted = np.empty(size, dtype=np.int64)
    following = np.empty(size, dtype=np.int64)
    for word in range(size):
        out = decide_packed(next_states, outputs, word, k, w)
        emitted[word] = out
        following[word] = (word * k) % size + out
    return emitted, following


@njit(cache=True)
def label_cycles(following):
    """
        Decomposes a functional graph into its cycles. Returns, per node,
        the id of the cycle it lies on (-1 for transient nodes) and the id
        of the cycle it drains into, plus the number of cycles.
    """
    size = following.shape[0]
    color = np.zeros(size, dtype=np.int8)
    on_cycle = np.full(size, -1, dtype=np.int64)
    basin = np.full(size, -1, dtype=np.int64)
    n_cycles = 0
    for origin in range(size):
        if color[origin] != 0:
            continue
        node = origin
        while color[node] == 0:
            color[node] = 1
            node = following[node]
        if color[node] == 1:
            member = node
            while True:
                on_cycle[member] = n_cycles
                member = following[member]
                if member == node:
                    break
            target = n_cycles
            n_cycles += 1
        else:
            target = basin[node]
        node = origin
        while color[node] == 1:
            color[node] = 2
            basin[node] = target
            node = following[node]
    return on_cycle, basin, n_cycles
