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
    This plugin implements the ``ifam hist`` command.

    It averages the first ``k**w`` price changes of a rule over windows
    of ``--window-len`` ticks taken every ``--stride`` ticks (128 and 128
    by default) and writes the histogram of these averages with the
    columns ``left, right, count, frequency``.
"""

from ifam.config import Config
from ifam.context import create_global_context
from ifam.libifam import (setup_parser_config_arg, setup_parser_model_args,
                          setup_parser_output_args, positive_int)
from ifam.output import write_table
from ifam.stats import HISTOGRAM_FIELDS, moving_average_histogram

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


class Hist:
    name = 'hist'
    helpmsg = 'Histogram of moving averages of price changes.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_model_args(parser, init=False)
        setup_parser_output_args(parser)
        parser.add_argument('--window-len', type=positive_int,
                            help='Ticks per moving average (default: 128)')
        parser.add_argument('--stride', type=positive_int,
                            help='Ticks between averages (default: 128)')
        parser.add_argument('--bins', type=positive_int,
                            help='Number of histogram bins (default: 100)')

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        cfg = ctx.config
        hist = moving_average_histogram(cfg.get_rule_spec(),
                                        cfg.get_lookback(),
                                        cfg.get_window_len(),
                                        cfg.get_stride(), cfg.get_bins())
        write_table(HISTOGRAM_FIELDS, hist.rows(), cfg.get_output_format(),
                    cfg.get_output_path())


__IFAM_PLUGINS__ = [Hist]
