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
    This plugin implements the ``ifam table1`` command.

    It measures the period of one rule for every lookback window of a
    range and writes one catalog row per window::

        ifam table1 --rule 54 --w 5..22

    A single number for ``--w`` is a range of one window. Without ``--w``
    the range is taken from the ``windows`` section of the experiment file
    and defaults to ``5..22``.
"""

from ifam.config import Config
from ifam.context import create_global_context
from ifam.libifam import (setup_parser_config_arg, setup_parser_model_args,
                          setup_parser_output_args)
from ifam.output import write_catalog
from ifam.rulescan import scan_windows

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


class Table1:
    name = 'table1'
    helpmsg = 'Measure the period of a rule over a range of lookbacks.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_model_args(parser, init=False)
        setup_parser_output_args(parser)

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        cfg = ctx.config
        spec = cfg.get_rule_spec()
        w_min, w_max = cfg.get_lookback_range()
        rows = scan_windows(spec.m, spec.s, spec.k, w_min, w_max, spec.b)
        write_catalog(rows, cfg.get_output_format(), cfg.get_output_path())


__IFAM_PLUGINS__ = [Table1]
