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
    This module contains and manages ifam plugins
"""

PLUGINS = {}


def register_plugins(mod):
    """
        Register all ifam plugins found in a module
    """
    for plugin in getattr(mod, '__IFAM_PLUGINS__', []):
        PLUGINS[plugin.name] = plugin


def load():
    """
        Import all ifam plugins
    """
    from . import decode
    from . import simulate
    from . import period
    from . import table1
    from . import scan
    from . import table2
    from . import baseline
    from . import hist
    from . import graph
    from . import attractors
    from . import gallery
    from . import reproduce

    register_plugins(decode)
    register_plugins(simulate)
    register_plugins(period)
    register_plugins(table1)
    register_plugins(scan)
    register_plugins(table2)
    register_plugins(baseline)
    register_plugins(hist)
    register_plugins(graph)
    register_plugins(attractors)
    register_plugins(gallery)
    register_plugins(reproduce)


def get(name):
    """
        Lookup an ifam plugin class by name
    """
    return PLUGINS.get(name, None)


def all():
    """
        Get a list of all loaded ifam plugin classes
    """
    return PLUGINS.values()
