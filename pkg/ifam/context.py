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
    This module contains the implementation of the ifam run context.
"""

import os
from ifam.ifamusererror import IfamUserError
from ifam.output import FORMATS

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'

__context__ = None


def create_global_context(args):
    """
        Creates global context as singleton.
    """
    global __context__
    __context__ = Context(args)
    return __context__


def get_context():
    """
        Returns singleton global context.
    """
    return __context__


class Context:
    """
        Implements the ifam run context: the parsed arguments, the
        environment defaults and the resolved configuration.
    """
    def __init__(self, args):
        work_dir = os.environ.get('IFAM_WORK_DIR', os.getcwd())
        self.__work_dir = os.path.abspath(work_dir)
        workers = os.environ.get('IFAM_WORKERS', '1')
        if not workers.isdigit() or int(workers) < 1:
            raise IfamUserError('IFAM_WORKERS must be a positive number')
        self.default_workers = int(workers)
        output_format = os.environ.get('IFAM_OUTPUT_FORMAT', None)
        if output_format is not None and output_format not in FORMATS:
            raise IfamUserError('IFAM_OUTPUT_FORMAT must be one of '
                                f'{", ".join(FORMATS)}')
        self.default_format = output_format
        self.config = None
        self.args = args

    @property
    def work_dir(self):
        """
            The directory relative output paths are resolved against
        """
        return self.__work_dir

    def resolve_path(self, path):
        """
            Returns ``path`` anchored at the work directory, or None for
            standard output.
        """
        if path is None or path == '-':
            return None
        return os.path.join(self.__work_dir, path)
