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
    This plugin implements the ``ifam simulate`` command.

    It generates the price series of a rule and writes one row per tick
    with the columns ``tick, movement, change, price``. Prices start at
    zero and are the running sum of the changes.

    By default ``k**w`` ticks are generated. ``--full-cycle`` generates
    exactly one period instead, which is how long a series runs before it
    repeats::

        ifam simulate --rule 54 --w 10 --full-cycle -o rule54-w10.csv
"""

import logging
from ifam.config import Config
from ifam.context import create_global_context
from ifam.dynamics import find_cycle, generate_series
from ifam.libifam import (setup_parser_config_arg, setup_parser_model_args,
                          setup_parser_output_args, positive_int)
from ifam.output import write_table
from ifam.ifamusererror import ArgsCombinationError

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

SERIES_FIELDS = ('tick', 'movement', 'change', 'price')


class Simulate:
    """
        Writes the tick series generated by a rule.
    """

    name = 'simulate'
    helpmsg = 'Generate the price series of a rule.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_model_args(parser)
        setup_parser_output_args(parser)
        parser.add_argument('--ticks', type=positive_int,
                            help='Number of ticks (default: k**w)')
        parser.add_argument('--full-cycle', action='store_true',
                            help='Generate exactly one period of ticks')

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        cfg = ctx.config
        spec = cfg.get_rule_spec()
        w = cfg.get_lookback()
        init = cfg.get_initial_history(w, spec.k)

        if args.full_cycle:
            if args.ticks is not None:
                raise ArgsCombinationError('--full-cycle cannot be used '
                                           'with --ticks')
            ticks = find_cycle(spec, w, init).period
        else:
            ticks = cfg.get_ticks(spec.k ** w)

        series = generate_series(spec, w, ticks, init)
        logging.info('%s w=%d: %d ticks, final price %d', spec, w, ticks,
                     series.prices[-1])
        write_table(SERIES_FIELDS, series.rows(), cfg.get_output_format(),
                    cfg.get_output_path())


__IFAM_PLUGINS__ = [Simulate]
