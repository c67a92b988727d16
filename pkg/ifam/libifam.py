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
    This module contains the argument helpers shared by ifam plugins.
"""

import argparse

from .output import FORMATS

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


def positive_int(text):
    """
        argparse type for integers >= 1
    """
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{text}" is not an integer')
    if value < 1:
        raise argparse.ArgumentTypeError(f'{value} must be at least 1')
    return value


def non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{text}" is not an integer')
    if value < 0:
        raise argparse.ArgumentTypeError(f'{value} must not be negative')
    return value


def setup_parser_config_arg(parser):
    parser.add_argument('-c', '--config',
                        help='Experiment file(s), separated by colon. '
                        'Command line flags override file settings.')


def setup_parser_model_args(parser, lookback=True, rule=True, init=True):
    """
        Adds the automaton selection flags. All defaults are resolved by
        :class:`ifam.config.Config`.
    """
    if rule:
        parser.add_argument('--rule', type=non_negative_int,
                            help='Rule number m (default: 54)')
    parser.add_argument('--s', dest='states', type=positive_int,
                        help='Number of states (default: 2)')
    parser.add_argument('--k', dest='symbols', type=positive_int,
                        help='Number of actions (default: 2)')
    parser.add_argument('--b', dest='base', type=positive_int,
                        help='Action base for k >= 4 (default: 2)')
    if lookback:
        parser.add_argument('--w', metavar='W',
                            help='Lookback window')
    if lookback and init:
        parser.add_argument('--init', metavar='HISTORY',
                            help='Initial history, oldest first: U/D for '
                            'k=2, one digit per day otherwise '
                            '(default: all UP)')


def setup_parser_output_args(parser):
    parser.add_argument('--format', choices=FORMATS,
                        help='Output format (default: csv)')
    parser.add_argument('-o', '--output', metavar='PATH',
                        help='Output file, relative to IFAM_WORK_DIR '
                        '(default: stdout)')


def setup_parser_workers_arg(parser):
    parser.add_argument('--workers', type=positive_int,
                        help='Number of worker processes (default: '
                        'IFAM_WORKERS or 1)')


def int_list(text):
    """
        argparse type for comma separated positive integers
    """
    return [positive_int(item) for item in text.split(',') if item]


def setup_parser_stats_args(parser):
    parser.add_argument('--ticks', type=positive_int,
                        help='Total number of ticks (default: 2**22)')
    parser.add_argument('--day-lengths', type=int_list, metavar='N[,N...]',
                        help='Ticks per day, one summary row each '
                        '(default: 32,64,...,131072)')
    parser.add_argument('--conventional-se', action='store_true',
                        default=None,
                        help='Report square-root standard errors')
