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
    This plugin implements the ``ifam attractors`` command.

    It lists every cycle of the transition graph of a rule with its
    period, the number of history words draining into it and its
    smallest member word. A rule is only complex for a lookback if one
    cycle covers more than half of all words.
"""

import logging
from ifam.config import Config
from ifam.context import create_global_context
from ifam.dynamics import HistoryWord, attractors, classify
from ifam.libifam import (setup_parser_config_arg, setup_parser_model_args,
                          setup_parser_output_args)
from ifam.output import write_table

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

ATTRACTOR_FIELDS = ('period', 'basin', 'smallest_word', 'word', 'class')


class Attractors:
    name = 'attractors'
    helpmsg = 'List all cycles of the transition graph of a rule.'

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
        w = cfg.get_lookback()
        found = attractors(spec, w)
        logging.info('%s w=%d: %d cycle(s)', spec, w, len(found))
        rows = [(a.period, a.basin, a.smallest_word,
                 HistoryWord.unpack(a.smallest_word, w, spec.k).to_string(),
                 str(classify(a.period, spec.k, w)))
                for a in found]
        write_table(ATTRACTOR_FIELDS, rows, cfg.get_output_format(),
                    cfg.get_output_path())


__IFAM_PLUGINS__ = [Attractors]
