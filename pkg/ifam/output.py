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
    This module contains the CSV and JSON writers for all data files.

    Output is byte-deterministic: no timestamps, integers in full and
    floats with 17 significant digits, so every number re-parses to the
    exact value it was written from.
"""

import csv
import io
import json
import os
import sys
from typing import TextIO, TypeVar

from .ifamusererror import IfamUserError, IfamRuntimeError
from .rulescan import CATALOG_FIELDS

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

FORMATS = ('csv', 'json')


class OutputFormatError(IfamUserError):
    def __init__(self, format):
        super().__init__(f'invalid format {format}')


class OutputPathError(IfamRuntimeError):
    def __init__(self, path, err):
        super().__init__(f'cannot write {path}: {err.strerror or err}')


class IoTarget:
    StrOrTextIO = TypeVar('StrOrTextIO', str, TextIO)

    target: StrOrTextIO
    managed: bool

    def __init__(self, target, managed):
        self.target = target
        self.managed = managed

    @classmethod
    def for_path(cls, path):
        """
            A file target for ``path``, stdout if ``path`` is None
        """
        if path is None:
            return cls(sys.stdout, managed=False)
        return cls(path, managed=True)


class IoTargetMonitor:
    """
    Simple monitor to unify access to file targets that need
    to be closed (files) and ambient ones (stdout / stderr)
    """

    def __init__(self, target: IoTarget):
        self._target = target
        self._file = None

    def __enter__(self):
        if self._target.managed:
            path = self._target.target
            try:
                parent = os.path.dirname(path)
                if parent:
                    os.makedirs(parent, exist_ok=True)
                self._file = open(path, 'w', encoding='utf-8', newline='')
            except OSError as err:
                raise OutputPathError(path, err)
            return self._file
        return self._target.target

    def __exit__(self, exc_type, exc_value, traceback):
        if self._target.managed:
            self._file.close()


def format_value(value):
    """
        Renders a single CSV cell.
    """
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format(value, '.17g')
    return str(value)


def render_table(header, rows, fmt):
    """
        Renders ``rows`` (sequences in ``header`` order) as CSV or as a
        JSON array of objects.
    """
    if fmt == 'csv':
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
        return buf.getvalue()
    if fmt == 'json':
        objects = [dict(zip(header, row)) for row in rows]
        return json.dumps(objects, indent=4) + '\n'
    raise OutputFormatError(fmt)


def write_table(header, rows, fmt, path=None):
    """
        Writes a table to ``path`` (stdout if None) and returns the number
        of bytes written.
    """
    text = render_table(header, rows, fmt)
    with IoTargetMonitor(IoTarget.for_path(path)) as f:
        f.write(text)
    return len(text.encode('utf-8'))


def write_catalog(rows, fmt, path=None):
    """
        Writes rule catalog rows with the columns
        ``s,k,w,rule,period,transient,class,pct_of_max``.
    """
    return write_table(CATALOG_FIELDS,
                       [tuple(row.as_dict().values()) for row in rows],
                       fmt, path)
