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
    This plugin implements the ``ifam reproduce`` command.

    It runs the complete set of reference experiments and writes one data
    file per step into an output directory (``results`` by default,
    relative to ``IFAM_WORK_DIR``):

    ``table1``
        periods of rule 54 for lookbacks 5 to 22
    ``table2``
        daily change statistics of rule 54 with lookback 22
    ``baseline``
        the same statistics for a seeded random walk
    ``hist``
        moving-average histograms of rule 54 for lookbacks 14 to 22
    ``scan``
        the catalog of all three-state rules with lookback 9
    ``gallery``
        price paths of the first 50 complex three-state rules

    Steps can be left out with ``--skip STEP`` (repeatable). Settings of
    an experiment file given with ``--config`` apply to all steps.
"""

import logging
import os
from ifam.automaton import RuleSpec
from ifam.config import Config
from ifam.context import create_global_context
from ifam.libcmds import Macro, Command
from ifam.libifam import (setup_parser_config_arg, setup_parser_workers_arg,
                          setup_parser_stats_args)
from ifam.output import FORMATS, write_catalog, write_table
from ifam.rulescan import (complex_gallery, scan_rules, scan_windows,
                           summarize_scan)
from ifam.stats import (HISTOGRAM_FIELDS, SUMMARY_FIELDS,
                        moving_average_histogram, random_walk_baseline,
                        series_summary, summary_table)
from .gallery import GALLERY_FIELDS, GALLERY_LIMIT, gallery_rows
from .scan import log_summary
from .table2 import TABLE_LOOKBACK

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

REFERENCE_RULE = RuleSpec(2, 2, 54)
TABLE1_WINDOWS = (5, 22)
HIST_WINDOWS = range(14, 23)
SCAN_STATES = 3
SCAN_LOOKBACK = 9


class ReproduceCommand(Command):
    """
        A reproduction step writing into the output directory.
    """

    def __init__(self, directory):
        super().__init__()
        self.directory = directory

    def target(self, ctx, stem):
        fmt = ctx.config.get_output_format()
        path = os.path.join(self.directory, f'{stem}.{fmt}')
        logging.info('%s: writing %s', self, path)
        return fmt, path


class Table1Step(ReproduceCommand):
    def __str__(self):
        return 'table1'

    def execute(self, ctx):
        fmt, path = self.target(ctx, 'table1')
        rows = scan_windows(REFERENCE_RULE.m, REFERENCE_RULE.s,
                            REFERENCE_RULE.k, *TABLE1_WINDOWS)
        write_catalog(rows, fmt, path)


def _summary_rows(rows):
    return [tuple(row.as_dict().values()) for row in rows]


class Table2Step(ReproduceCommand):
    def __str__(self):
        return 'table2'

    def execute(self, ctx):
        cfg = ctx.config
        fmt, path = self.target(ctx, 'table2')
        rows = summary_table(REFERENCE_RULE, TABLE_LOOKBACK,
                             cfg.get_total_ticks(), cfg.get_day_lengths(),
                             conventional_se=cfg.get_conventional_se())
        write_table(SUMMARY_FIELDS, _summary_rows(rows), fmt, path)


class BaselineStep(ReproduceCommand):
    def __str__(self):
        return 'baseline'

    def execute(self, ctx):
        cfg = ctx.config
        fmt, path = self.target(ctx, 'baseline')
        walk = random_walk_baseline(cfg.get_total_ticks(), cfg.get_seed())
        rows = series_summary(walk.changes, cfg.get_day_lengths(),
                              cfg.get_conventional_se())
        write_table(SUMMARY_FIELDS, _summary_rows(rows), fmt, path)


class HistStep(ReproduceCommand):
    def __str__(self):
        return 'hist'

    def execute(self, ctx):
        cfg = ctx.config
        for w in HIST_WINDOWS:
            fmt, path = self.target(ctx, f'hist-w{w}')
            hist = moving_average_histogram(REFERENCE_RULE, w,
                                            cfg.get_window_len(),
                                            cfg.get_stride(), cfg.get_bins())
            write_table(HISTOGRAM_FIELDS, hist.rows(), fmt, path)


class ScanStep(ReproduceCommand):
    def __str__(self):
        return 'scan'

    def execute(self, ctx):
        fmt, path = self.target(ctx, f'scan-s{SCAN_STATES}-w{SCAN_LOOKBACK}')
        rows = scan_rules(SCAN_STATES, 2, SCAN_LOOKBACK,
                          workers=ctx.config.get_workers())
        log_summary(summarize_scan(rows))
        write_catalog(rows, fmt, path)


class GalleryStep(ReproduceCommand):
    def __str__(self):
        return 'gallery'

    def execute(self, ctx):
        fmt, path = self.target(ctx, 'gallery')
        gallery = complex_gallery(SCAN_STATES, 2, SCAN_LOOKBACK,
                                  GALLERY_LIMIT,
                                  workers=ctx.config.get_workers())
        write_table(GALLERY_FIELDS, gallery_rows(gallery), fmt, path)


STEPS = (Table1Step, Table2Step, BaselineStep, HistStep, ScanStep,
         GalleryStep)
STEP_NAMES = ('table1', 'table2', 'baseline', 'hist', 'scan', 'gallery')


class Reproduce:
    """
        Runs all reference experiments into one directory.
    """

    name = 'reproduce'
    helpmsg = 'Run all reference experiments into a directory.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_workers_arg(parser)
        setup_parser_stats_args(parser)
        parser.add_argument('--format', choices=FORMATS,
                            help='Output format (default: csv)')
        parser.add_argument('-o', '--output', metavar='DIR',
                            default='results',
                            help='Output directory, relative to '
                            'IFAM_WORK_DIR (default: results)')
        parser.add_argument('--skip', action='append', default=[],
                            choices=STEP_NAMES,
                            help='Skip a step (repeatable)')

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        directory = ctx.resolve_path(args.output) or ctx.work_dir

        macro = Macro(step(directory) for step in STEPS)
        macro.run(ctx, args.skip)


__IFAM_PLUGINS__ = [Reproduce]
