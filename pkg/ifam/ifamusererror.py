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
    This module provides the common base classes for all ifam exceptions.

    User or input errors (an invalid rule number, a malformed history, a
    broken experiment file) derive from :class:`IfamUserError`. They are
    reported as a single log line and map to exit code 2.

    Failures that are no user mistake but still expected (for example a
    lookback window whose history space does not fit into memory) derive
    from :class:`IfamRuntimeError` and map to exit code 1.

    Never return directly using `sys.exit`, but raise one of these
    exceptions. They are handled centrally in :mod:`ifam.ifam`.
"""


__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


class IfamUserError(Exception):
    """
    User or input error. Derive all user error exceptions from this class.
    """
    pass


class IfamRuntimeError(Exception):
    """
    Expected runtime failure which is not caused by invalid input.
    """
    pass


class ArgsCombinationError(IfamUserError):
    """
    Invalid combination of CLI arguments provided
    """
    def __init__(self, message):
        super().__init__(f'Invalid combination of arguments: {message}')


class RuleSpecError(IfamUserError):
    """
    Invalid automaton dimensions or rule number
    """
    pass


class MalformedTableError(IfamUserError):
    """
    A transition table is not total or contains out-of-range entries
    """
    pass


class SymbolRangeError(IfamUserError):
    """
    A state or symbol lies outside of the automaton's alphabet
    """
    pass


class HistoryError(IfamUserError):
    """
    A history word has the wrong length or contains invalid symbols
    """
    pass


class AggregationError(IfamUserError):
    """
    A tick series cannot be cut into the requested days or windows
    """
    pass


class UndefinedMomentError(IfamUserError):
    """
    Standardized moments are undefined for series without variance
    """
    def __init__(self, size):
        super().__init__('Skewness and kurtosis are undefined for a series '
                         f'of {size} values without variance')


class ResourceGuardError(IfamRuntimeError):
    """
    The number of history words exceeds what can be enumerated. The
    message is kept on a single machine-parseable line.
    """
    def __init__(self, states, limit):
        self.states = states
        self.limit = limit
        super().__init__(f'resource_guard states={states} limit={limit}')
