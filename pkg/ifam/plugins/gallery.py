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
    This plugin implements the ``ifam gallery`` command.

    It scans a rule space, keeps the first ``--limit`` complex rules and
    writes their price paths in long format (``rule, tick, price``), one
    row per rule and tick. For the three-state space with lookback 9::

        ifam gallery --s 3 --k 2 --w 9 --limit 50 -o gallery.csv

    writes the first 512 prices of 50 complex rules.
"""

from ifam.config import Config
from ifam.context import create_global_context
from ifam.libifam import (setup_parser_config_arg, setup_parser_model_args,
                          setup_parser_output_args, setup_parser_workers_arg,
                          positive_int)
from ifam.output import write_table
from ifam.rulescan import complex_gallery

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

GALLERY_FIELDS = ('rule', 'tick', 'price')
GALLERY_LIMIT = 50


def gallery_rows(gallery):
    for rule, prices in gallery:
        for tick, price in enumerate(prices.tolist(), start=1):
            yield rule, tick, price


class Gallery:
    name = 'gallery'
    helpmsg = 'Export price paths of the first complex rules of a scan.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_model_args(parser, rule=False, init=False)
        setup_parser_workers_arg(parser)
        setup_parser_output_args(parser)
        parser.add_argument('--limit', type=positive_int,
                            help='Number of complex rules (default: 50)')
        parser.add_argument('--ticks', type=positive_int,
                            help='Prices per rule (default: k**w)')

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        cfg = ctx.config
        k, w = cfg.get_symbols(), cfg.get_lookback()
        gallery = complex_gallery(cfg.get_states(), k, w,
                                  cfg.get_limit(GALLERY_LIMIT),
                                  cfg.get_ticks(k ** w), cfg.get_base(),
                                  cfg.get_workers())
        write_table(GALLERY_FIELDS, gallery_rows(gallery),
                    cfg.get_output_format(), cfg.get_output_path())


__IFAM_PLUGINS__ = [Gallery]
