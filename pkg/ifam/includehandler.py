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
    This module implements how experiment files and their includes are
    loaded in ifam.
"""

import os
from collections import OrderedDict
from collections.abc import Mapping
import functools
import logging
import json
import yaml

from jsonschema.validators import validator_for

from .ifamusererror import IfamUserError
from . import __file_version__, __compatible_file_version__
from . import CONFIGSCHEMA

__license__ = 'MIT'
__copyright__ = 'Copyright (c) The ifam authors, 2024'


class LoadConfigException(IfamUserError):
    """
        Class for exceptions that appear while loading an experiment file.
    """
    def __init__(self, message, filename):
        super().__init__(f'{message}: {filename}')


def load_config(filename):
    """
        Load the experiment file and test if its version is supported.
    """
    (_, ext) = os.path.splitext(filename)
    config = None
    if ext == '.json':
        with open(filename, 'rb') as fds:
            config = json.load(fds)
    elif ext in ['.yml', '.yaml']:
        with open(filename, 'rb') as fds:
            config = yaml.safe_load(fds)
    else:
        raise LoadConfigException('Experiment file extension not recognized',
                                  filename)

    validator_class = validator_for(CONFIGSCHEMA)
    validator = validator_class(CONFIGSCHEMA)
    validation_error = False

    for error in validator.iter_errors(config):
        validation_error = True
        logging.error('Experiment file validation Error:\n%s', error)

    if validation_error:
        raise LoadConfigException('Error(s) occured while validating the '
                                  'experiment file', filename)

    version_value = config['header']['version']
    if version_value < __compatible_file_version__ or \
       version_value > __file_version__:
        raise LoadConfigException('This version of ifam is compatible with '
                                  f'version {__compatible_file_version__} '
                                  f'to {__file_version__}, '
                                  f'file has version {version_value}',
                                  filename)

    windows = config.get('windows', {})
    if windows.get('min', 1) > windows.get('max', windows.get('min', 1)):
        raise LoadConfigException('windows.min must not exceed windows.max',
                                  filename)

    return config


class IncludeException(IfamUserError):
    """
        Class for exceptions that appear in the include mechanism.
    """
    pass


class IncludeHandler:
    """
        Implements a handler where every experiment file should contain a
        dictionary as the base type with a 'header' key optionally
        containing a list of 'includes'. Include paths are relative to the
        including file.

        The includes are read and merged from the deepest level upwards.
    """

    def __init__(self, top_files):
        self.top_files = top_files

    def get_config(self):
        """
        Returns:
          config -- A dictionary containing the merged configuration
        """

        def _internal_include_handler(filename, stack):
            """
            Recursively loads include files.

            Includes are done in the following way:

            topfile.yml:
            -------
            header:
              includes:
                - include1.yml
                - include2.yml
            -------

            Includes are merged in in this order:
            ['include1.yml', 'include2.yml', 'topfile.yml']
            On conflict the latter includes overwrite previous ones and
            the current file overwrites every include. (evaluation depth first
            and from top to bottom)
            """
            if filename in stack:
                raise IncludeException('Circular include of '
                                       f'{filename} via {stack[-1]}')
            configs = []
            try:
                current_config = load_config(filename)
            except FileNotFoundError:
                raise LoadConfigException('Experiment file not found',
                                          filename)
            if not isinstance(current_config, Mapping):
                raise IncludeException('Experiment file does not contain a '
                                       'dictionary as base type')
            header = current_config.get('header', {})

            for include in header.get('includes', []):
                includefile = os.path.abspath(
                    os.path.join(os.path.dirname(filename), include))
                logging.debug('include %s from %s', includefile, filename)
                configs.extend(_internal_include_handler(
                    includefile, stack + [filename]))
            configs.append((filename, current_config))
            return configs

        def _internal_dict_merge(dest, upd):
            """
            Merges upd recursively into a copy of dest as OrderedDict
            """
            if (not isinstance(dest, Mapping)) \
                    or (not isinstance(upd, Mapping)):
                raise IncludeException('Cannot merge using non-dict')
            dest = OrderedDict(dest)
            for key, val in upd.items():
                dest_subkey = dest.get(key, None)
                if isinstance(dest_subkey, Mapping) \
                        and isinstance(val, Mapping):
                    dest[key] = _internal_dict_merge(dest_subkey, val)
                else:
                    dest[key] = val
            return dest

        configs = []
        for configfile in self.top_files:
            configs.extend(_internal_include_handler(
                os.path.abspath(configfile), []))

        config = functools.reduce(_internal_dict_merge,
                                  map(lambda x: x[1], configs))
        # includes are already expanded, drop them from the result
        header = OrderedDict(config.get('header', {}))
        header.pop('includes', None)
        config['header'] = header
        return config
