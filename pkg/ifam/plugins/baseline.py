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
    This plugin implements the ``ifam baseline`` command.

    It summarizes a seeded random walk of independent, equally likely
    up and down ticks with the same columns as ``ifam table2``, so both
    tables can be compared row by row::

        ifam baseline --seed 7 -o baseline.csv
"""

import logging
from ifam.config import Config
from ifam.context import create_global_context
from ifam.libifam import (setup_parser_config_arg, setup_parser_output_args,
                          setup_parser_stats_args, non_negative_int)
from ifam.stats import random_walk_baseline, series_summary
from .table2 import write_summary

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


class Baseline:
    name = 'baseline'
    helpmsg = 'Summarize a seeded random walk for comparison.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_stats_args(parser)
        setup_parser_output_args(parser)
        parser.add_argument('--seed', type=non_negative_int,
                            help='Seed of the random generator (default: 0)')

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        cfg = ctx.config
        seed = cfg.get_seed()
        logging.info('Random walk of %d ticks, seed %d',
                     cfg.get_total_ticks(), seed)
        walk = random_walk_baseline(cfg.get_total_ticks(), seed)
        write_summary(cfg, series_summary(walk.changes,
                                          cfg.get_day_lengths(),
                                          cfg.get_conventional_se()))


__IFAM_PLUGINS__ = [Baseline]
