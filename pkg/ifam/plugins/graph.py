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
    This plugin implements the ``ifam graph`` command.

    It writes the transition graph of a rule as an edge list: every
    history word, the word it moves to and the symbol emitted on the
    way. Words are packed integers (digit ``i`` in base ``k`` is the
    movement ``i`` days ago) unless ``--words`` renders them oldest-first
    as ``U``/``D`` strings.
"""

from ifam.config import Config
from ifam.context import create_global_context
from ifam.dynamics import HistoryWord, transition_graph
from ifam.libifam import (setup_parser_config_arg, setup_parser_model_args,
                          setup_parser_output_args)
from ifam.output import write_table

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

EDGE_FIELDS = ('from_word', 'to_word', 'emitted_symbol')


class Graph:
    name = 'graph'
    helpmsg = 'Export the transition graph of a rule as an edge list.'

    @classmethod
    def setup_parser(cls, parser):
        setup_parser_config_arg(parser)
        setup_parser_model_args(parser, init=False)
        setup_parser_output_args(parser)
        parser.add_argument('--words', action='store_true',
                            help='Write history words as strings')

    def run(self, args):
        ctx = create_global_context(args)
        ctx.config = Config(ctx, args.config)
        cfg = ctx.config
        spec = cfg.get_rule_spec()
        w = cfg.get_lookback()
        graph = transition_graph(spec, w)
        edges = graph.edges()
        if args.words:
            def word(packed):
                return HistoryWord.unpack(packed, w, spec.k).to_string()
            edges = ((word(a), word(b), out) for a, b, out in edges)
        write_table(EDGE_FIELDS, edges, cfg.get_output_format(),
                    cfg.get_output_path())


__IFAM_PLUGINS__ = [Graph]
