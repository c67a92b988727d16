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


import os
import io
import textwrap
import contextlib

import pytest

from ifam import includehandler


@pytest.fixture(autouse=True)
def fixed_version(monkeypatch):
    monkeypatch.setattr(includehandler, '__file_version__', 5)
    monkeypatch.setattr(includehandler, '__compatible_file_version__', 4)


class MockFileIO(io.StringIO):
    def close(self):
        self.seek(0)


def mock_file(indented_content):
    return MockFileIO(textwrap.dedent(indented_content))


@contextlib.contextmanager
def patch_open(component, string='', dictionary=None):
    dictionary = dictionary or {}
    old_attr = getattr(component, 'open', None)
    component.open = lambda f, *a, **k: mock_file(dictionary.get(f, string))
    yield
    if old_attr:
        component.open = old_attr
    else:
        del component.open


class TestLoadConfig:
    def test_err_invalid_ext(self):
        # Test for invalid file extension:
        exception = includehandler.LoadConfigException
        with pytest.raises(exception):
            includehandler.load_config('x.xyz')

    def util_exception_content(self, testvector):
        for string, exception in testvector:
            with patch_open(includehandler, string=string):
                with pytest.raises(exception):
                    includehandler.load_config('x.yml')

    def test_err_header_missing(self):
        exception = includehandler.LoadConfigException
        testvector = [
            ('', exception),
            ('a', exception),
            ('1', exception),
            ('model: {rule: 54}', exception),
        ]

        self.util_exception_content(testvector)

    def test_err_version_invalid(self):
        exception = includehandler.LoadConfigException
        testvector = [
            ('header: {}', exception),
            ('header: {version: "x"}', exception),
            ('header: {version: 3}', exception),
            ('header: {version: 6}', exception),
        ]

        self.util_exception_content(testvector)

    def test_err_invalid_settings(self):
        exception = includehandler.LoadConfigException
        testvector = [
            ('header: {version: 5}\nmodel: {rule: -1}', exception),
            ('header: {version: 5}\nmodel: {symbols: 0}', exception),
            ('header: {version: 5}\nmodel: {colour: red}', exception),
            ('header: {version: 5}\noutput: {format: xml}', exception),
            ('header: {version: 5}\nwindows: {min: 9, max: 5}', exception),
            ('header: {version: 5}\nmarket: {}', exception),
        ]

        self.util_exception_content(testvector)

    def test_valid(self):
        testvector = [
            'header: {version: 4}',
            'header: {version: 5}',
            '''
            header:
              version: 5
            model:
              rule: 54
              lookback: 22
              init: DUUDDUDUUDUDDUDUUDUDDU
            statistics:
              day_lengths: [32, 64]
              conventional_se: true
            windows: {min: 5, max: 22}
            ''',
        ]
        for string in testvector:
            with patch_open(includehandler, string=string):
                includehandler.load_config('x.yml')

    def test_json(self):
        with patch_open(includehandler,
                        string='{"header": {"version": 5}, '
                        '"scan": {"workers": 4}}'):
            config = includehandler.load_config('x.json')
        assert config['scan'] == {'workers': 4}


class TestIncludes:
    header = '''
header:
  version: 5
{}'''

    def util_include_content(self, testvector, monkeypatch):
        # disable schema validation for these tests:
        monkeypatch.setattr(includehandler, 'CONFIGSCHEMA', {})
        for test in testvector:
            with patch_open(includehandler, dictionary=test['fdict']):
                ginc = includehandler.IncludeHandler(['x.yml'])
                config = ginc.get_config()

                # Remove header, because we dont want to compare it:
                config.pop('header')

                assert test['conf'] == config

    def test_valid_includes_none(self, monkeypatch):
        header = self.__class__.header
        testvector = [
            {
                'fdict': {
                    os.path.abspath('x.yml'): header.format('')
                },
                'conf': {
                },
            },
        ]

        self.util_include_content(testvector, monkeypatch)

    def test_valid_includes_some(self, monkeypatch):
        header = self.__class__.header
        testvector = [
            # Include one file from the same directory:
            {
                'fdict': {
                    os.path.abspath('x.yml'):
                        header.format('  includes: ["y.yml"]'),
                    os.path.abspath('y.yml'): header.format('\nv:')
                },
                'conf': {
                    'v': None
                },
            },
            # Includes are relative to the including file:
            {
                'fdict': {
                    os.path.abspath('x.yml'):
                        header.format('  includes: ["dir1/y.yml"]'),
                    os.path.abspath('dir1/y.yml'):
                        header.format('  includes: ["dir2/z.yml"]'),
                    os.path.abspath('dir1/dir2/z.yml'): header.format('\nv:')
                },
                'conf': {
                    'v': None
                },
            },
        ]

        self.util_include_content(testvector, monkeypatch)

    def test_valid_overwriting(self, monkeypatch):
        header = self.__class__.header
        testvector = [
            {
                'fdict': {
                    os.path.abspath('x.yml'): header.format(
                        '''  includes: ["y.yml"]
model: {rule: 201}'''),
                    os.path.abspath('y.yml'): header.format('''
model: {rule: 54}''')
                },
                'conf': {
                    'model': {'rule': 201}
                },
            },
            {
                'fdict': {
                    os.path.abspath('x.yml'): header.format(
                        '''  includes: ["y.yml"]
statistics:
  day_lengths: [64]'''),
                    os.path.abspath('y.yml'): header.format('''
statistics:
  day_lengths: [32, 64, 128]''')
                },
                'conf': {
                    'statistics': {'day_lengths': [64]}
                },
            },
        ]

        self.util_include_content(testvector, monkeypatch)

    def test_valid_merging(self, monkeypatch):
        header = self.__class__.header
        testvector = [
            {
                'fdict': {
                    os.path.abspath('x.yml'): header.format(
                        '''  includes: ["y.yml"]
model:
  rule: 54
  lookback: 22'''),
                    os.path.abspath('y.yml'): header.format('''
model:
  states: 2
  lookback: 10
scan:
  workers: 4''')
                },
                'conf': {
                    'model': {'rule': 54, 'states': 2, 'lookback': 22},
                    'scan': {'workers': 4},
                },
            },
        ]

        self.util_include_content(testvector, monkeypatch)

    def test_valid_ordering(self, monkeypatch):
        # disable schema validation for this test:
        monkeypatch.setattr(includehandler, 'CONFIGSCHEMA', {})
        header = self.__class__.header
        data = {os.path.abspath('x.yml'):
                header.format('''  includes: ["y.yml", "z.yml"]
v: {v1: x, v2: x}'''),
                os.path.abspath('y.yml'):
                header.format('''  includes: ["z.yml"]
v: {v2: y, v3: y, v5: y}'''),
                os.path.abspath('z.yml'): header.format('''
v: {v3: z, v4: z}''')}
        with patch_open(includehandler, dictionary=data):
            ginc = includehandler.IncludeHandler(['x.yml'])
            config = ginc.get_config()
            keys = list(config['v'].keys())
            index = {keys[i]: i for i in range(len(keys))}

            # Check for vars in z.yml:
            assert index['v3'] < index['v1']
            assert index['v3'] < index['v2']
            assert index['v3'] < index['v5']
            assert index['v4'] < index['v1']
            assert index['v4'] < index['v2']
            assert index['v4'] < index['v5']

            # Check for vars in y.yml:
            assert index['v2'] < index['v1']
            assert index['v3'] < index['v1']
            assert index['v5'] < index['v1']

    def test_circular_include(self, monkeypatch):
        monkeypatch.setattr(includehandler, 'CONFIGSCHEMA', {})
        header = self.__class__.header
        data = {os.path.abspath('x.yml'):
                header.format('  includes: ["y.yml"]'),
                os.path.abspath('y.yml'):
                header.format('  includes: ["x.yml"]')}
        with patch_open(includehandler, dictionary=data):
            ginc = includehandler.IncludeHandler(['x.yml'])
            with pytest.raises(includehandler.IncludeException):
                ginc.get_config()

    def test_includes_dropped_from_header(self, monkeypatch):
        monkeypatch.setattr(includehandler, 'CONFIGSCHEMA', {})
        header = self.__class__.header
        data = {os.path.abspath('x.yml'):
                header.format('  includes: ["y.yml"]'),
                os.path.abspath('y.yml'): header.format('')}
        with patch_open(includehandler, dictionary=data):
            config = includehandler.IncludeHandler(['x.yml']).get_config()
        assert config['header'] == {'version': 5}
