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
    This plugin implements the ``ifam scan`` command.

    It classifies every rule of an ``(s, k)`` rule space for one lookback
    window and writes the rule catalog. The class counts are logged when
    the scan is done, with complex rules counted both as rule numbers and
    as distinct automata up to a relabeling of states::

        ifam scan --s 3 --k 2 --w 9 --workers 8 -o scan-s3-w9.csv

    ``--rules A..B`` restricts the scan to a contiguous range of rule
    numbers.
"""

import logging
from ifam.config import Config
from ifam.context import create_global_context
from ifam.libifam import (setup_parser_config_arg, setup_parser_model_args,
                          setup_parser_output_args, setup_parser_workers_arg)
from ifam.output import write_catalog
from ifam.rulescan import scan_rules, summarize_scan

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


def log_summary(summary):
    for complexity, count in summary.counts.items():
        logging.info('%s: %d of %d', complexity, count, summary.total)
    logging.info('Complex rules: %d (%d up to relabeling of states)',
                 summary.complex_count, summary.deduplicated_complex)


class Scan:
    """
        Classifies whole rule spaces.
    """

    name = 'scan'
    helpmsg = 'Classify every rule of a rule space.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_model_args(parser, rule=False, init=False)
        setup_parser_workers_arg(parser)
        setup_parser_output_args(parser)
        parser.add_argument('--rules', metavar='A..B',
                            help='Range of rule numbers (default: all)')

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        cfg = ctx.config
        s, k = cfg.get_states(), cfg.get_symbols()
        rows = scan_rules(s, k, cfg.get_lookback(), cfg.get_rule_range(),
                          cfg.get_base(), cfg.get_workers())
        log_summary(summarize_scan(rows))
        write_catalog(rows, cfg.get_output_format(), cfg.get_output_path())


__IFAM_PLUGINS__ = [Scan]
