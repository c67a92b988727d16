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
    This plugin implements the ``ifam period`` command.

    It follows the orbit of the initial history (all UP by default) under
    the market dynamics and prints one line::

        period=21 transient=<t> class=Complex max=32

    ``period`` is the pure cycle length, ``transient`` the number of days
    before the cycle is entered and ``max`` the number ``k**w`` of
    possible histories.
"""

from ifam.config import Config
from ifam.context import create_global_context
from ifam.dynamics import find_cycle
from ifam.libifam import setup_parser_config_arg, setup_parser_model_args
from ifam.output import IoTarget, IoTargetMonitor

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


class Period:
    name = 'period'
    helpmsg = 'Measure period, transient and complexity of a rule.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_model_args(parser)
        parser.add_argument('-o', '--output', metavar='PATH',
                            help='Output file (default: stdout)')

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        spec = ctx.config.get_rule_spec()
        w = ctx.config.get_lookback()
        result = find_cycle(spec, w, ctx.config.get_initial_history(w, spec.k))

        target = IoTarget.for_path(ctx.config.get_output_path())
        with IoTargetMonitor(target) as f:
            f.write(f'{result}\n')


__IFAM_PLUGINS__ = [Period]
