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
    This module contains the implementation of the ifam run configuration.

    Every setting is resolved in the following order: command line flag,
    environment variable (where one exists), experiment file(s), built-in
    default.
"""

import os
from .automaton import RuleSpec
from .dynamics import init_history
from .includehandler import IncludeHandler
from .ifamusererror import ArgsCombinationError, IfamUserError
from .stats import (TABLE_TICKS, TABLE_DAY_LENGTHS, MA_WINDOW,
                    HISTOGRAM_BINS)

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

DEFAULT_RULE = 54
DEFAULT_STATES = 2
DEFAULT_SYMBOLS = 2
DEFAULT_BASE = 2
DEFAULT_LOOKBACK = 10
DEFAULT_LOOKBACK_RANGE = (5, 22)
DEFAULT_FORMAT = 'csv'


def parse_span(text):
    """
        Parses ``"A..B"`` into ``(A, B)`` and a plain number ``"A"`` into
        ``(A, A)``.
    """
    try:
        if '..' in text:
            low, high = text.split('..', 1)
            span = (int(low), int(high))
        else:
            span = (int(text), int(text))
    except ValueError:
        raise IfamUserError(f'Invalid number or range "{text}", '
                            'expected N or A..B')
    if span[0] > span[1]:
        raise IfamUserError(f'Empty range "{text}"')
    return span


class Config:
    """
        Implements the ifam run configuration based on command line
        arguments and experiment files.
    """
    def __init__(self, ctx, filename=None):
        self._ctx = ctx
        self._args = ctx.args
        self._config = {}
        self.filenames = []
        if filename:
            self.filenames = [os.path.abspath(configfile)
                              for configfile in filename.split(':')]
            self.handler = IncludeHandler(self.filenames)
            self._config = self.handler.get_config()

    def _arg(self, name):
        return getattr(self._args, name, None)

    def _section(self, name):
        return self._config.get(name, {}) or {}

    def _setting(self, arg, section, key, default):
        value = self._arg(arg)
        if value is not None:
            return value
        return self._section(section).get(key, default)

    def get_rule_spec(self):
        """
            Returns the selected rule
        """
        return RuleSpec(self.get_states(), self.get_symbols(),
                        self._setting('rule', 'model', 'rule', DEFAULT_RULE),
                        self.get_base())

    def get_states(self):
        return self._setting('states', 'model', 'states', DEFAULT_STATES)

    def get_symbols(self):
        return self._setting('symbols', 'model', 'symbols', DEFAULT_SYMBOLS)

    def get_base(self):
        return self._setting('base', 'model', 'base', DEFAULT_BASE)

    def get_lookback(self, default=DEFAULT_LOOKBACK):
        """
            Returns the single lookback window of the command
        """
        text = self._arg('w')
        if text is None:
            return self._section('model').get('lookback', default)
        low, high = parse_span(text)
        if low != high:
            raise ArgsCombinationError(f'lookback range "{text}" is only '
                                       'supported by table1')
        return low

    def get_lookback_range(self):
        """
            Returns ``(w_min, w_max)``
        """
        text = self._arg('w')
        if text is not None:
            return parse_span(text)
        windows = self._section('windows')
        if windows:
            low = windows.get('min', DEFAULT_LOOKBACK_RANGE[0])
            return low, windows.get('max', max(low, DEFAULT_LOOKBACK_RANGE[1]))
        return DEFAULT_LOOKBACK_RANGE

    def get_initial_history(self, w, k):
        """
            Returns the initial history word (all UP unless overridden)
        """
        return init_history(w, k, self._setting('init', 'model', 'init',
                                                None))

    def get_ticks(self, default):
        return self._setting('ticks', 'simulation', 'ticks', default)

    def get_seed(self):
        return self._setting('seed', 'simulation', 'seed', 0)

    def get_workers(self):
        """
            Returns the number of scan workers
        """
        workers = self._arg('workers')
        if workers is not None:
            return workers
        if 'IFAM_WORKERS' in os.environ:
            return self._ctx.default_workers
        return self._section('scan').get('workers',
                                         self._ctx.default_workers)

    def get_rule_range(self):
        """
            Returns the range of rules to scan, or None for all rules
        """
        text = self._arg('rules')
        if text is not None:
            low, high = parse_span(text)
            return range(low, high + 1)
        scan = self._section('scan')
        if 'first' in scan or 'last' in scan:
            spec_count = (self.get_states() * self.get_symbols()) \
                ** (self.get_states() * self.get_symbols())
            return range(scan.get('first', 0),
                         scan.get('last', spec_count - 1) + 1)
        return None

    def get_limit(self, default):
        return self._setting('limit', 'scan', 'limit', default)

    def get_total_ticks(self):
        return self._setting('ticks', 'statistics', 'total_ticks',
                             TABLE_TICKS)

    def get_day_lengths(self):
        """
            Returns the number of ticks per day for each summary row
        """
        lengths = self._arg('day_lengths')
        if lengths is None:
            lengths = self._section('statistics').get('day_lengths',
                                                      TABLE_DAY_LENGTHS)
        return [int(length) for length in lengths]

    def get_conventional_se(self):
        if self._arg('conventional_se'):
            return True
        return self._section('statistics').get('conventional_se', False)

    def get_window_len(self):
        return self._setting('window_len', 'statistics', 'window_len',
                             MA_WINDOW)

    def get_stride(self):
        return self._setting('stride', 'statistics', 'stride', MA_WINDOW)

    def get_bins(self):
        return self._setting('bins', 'statistics', 'bins', HISTOGRAM_BINS)

    def get_output_format(self):
        """
            Returns the output format (csv or json)
        """
        fmt = self._arg('format')
        if fmt is not None:
            return fmt
        if self._ctx.default_format:
            return self._ctx.default_format
        return self._section('output').get('format', DEFAULT_FORMAT)

    def get_output_path(self):
        """
            Returns the absolute output path or None for stdout
        """
        return self._ctx.resolve_path(
            self._setting('output', 'output', 'path', None))
