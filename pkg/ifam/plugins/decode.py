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
    This plugin implements the ``ifam decode`` command.

    It prints the transition table of a rule, one edge per line, in the
    form ``{state,input} -> {next state,output}``. States start at 1;
    symbol 0 is the strongest sell (DOWN for two actions), symbol ``k-1``
    the strongest buy (UP).

    For example, the minimal model::

        ifam decode --rule 54 --s 2 --k 2

    prints::

        {1,1} -> {1,0}
        {1,0} -> {2,1}
        {2,1} -> {1,1}
        {2,0} -> {2,0}
"""

import logging
from ifam.automaton import decode_rule, action_values
from ifam.config import Config
from ifam.context import create_global_context
from ifam.libifam import setup_parser_config_arg, setup_parser_model_args
from ifam.output import IoTarget, IoTargetMonitor

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


class Decode:
    """
        Prints the transition table of a rule.
    """

    name = 'decode'
    helpmsg = 'Print the transition table of a rule.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_model_args(parser, lookback=False)
        parser.add_argument('-o', '--output', metavar='PATH',
                            help='Output file (default: stdout)')

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        spec = ctx.config.get_rule_spec()
        table = decode_rule(spec)
        logging.info('%s, actions %s', spec, action_values(spec.k, spec.b))

        target = IoTarget.for_path(ctx.config.get_output_path())
        with IoTargetMonitor(target) as f:
            for (q, x), (nxt, out) in table.items():
                f.write(f'{{{q},{x}}} -> {{{nxt},{out}}}\n')


__IFAM_PLUGINS__ = [Decode]
