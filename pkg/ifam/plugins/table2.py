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
    This plugin implements the ``ifam table2`` command.

    It generates ``--ticks`` ticks (``2**22`` by default) of a rule with
    lookback 22 and summarizes the daily price changes for every day
    length of ``--day-lengths`` (32, 64, ..., 131072 ticks per day by
    default). Each row holds the number of days, the number of distinct
    daily changes, skewness, excess kurtosis and their standard errors.

    The standard errors are ``6/d`` and ``24/d`` for ``d`` days unless
    ``--conventional-se`` selects their square roots.
"""

from ifam.config import Config
from ifam.context import create_global_context
from ifam.libifam import (setup_parser_config_arg, setup_parser_model_args,
                          setup_parser_output_args, setup_parser_stats_args)
from ifam.output import write_table
from ifam.stats import SUMMARY_FIELDS, summary_table

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

TABLE_LOOKBACK = 22


def write_summary(cfg, rows):
    write_table(SUMMARY_FIELDS,
                [tuple(row.as_dict().values()) for row in rows],
                cfg.get_output_format(), cfg.get_output_path())


class Table2:
    """
        Summarizes the distribution of daily price changes.
    """

    name = 'table2'
    helpmsg = 'Summarize daily price changes for several day lengths.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_model_args(parser)
        setup_parser_stats_args(parser)
        setup_parser_output_args(parser)

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        cfg = ctx.config
        spec = cfg.get_rule_spec()
        w = cfg.get_lookback(TABLE_LOOKBACK)
        rows = summary_table(spec, w, cfg.get_total_ticks(),
                             cfg.get_day_lengths(),
                             cfg.get_initial_history(w, spec.k),
                             cfg.get_conventional_se())
        write_summary(cfg, rows)


__IFAM_PLUGINS__ = [Table2]
