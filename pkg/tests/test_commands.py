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

import csv
import json
import os
import shutil

import pytest

from ifam import ifam
from ifam.ifamusererror import (ArgsCombinationError, ResourceGuardError,
                                RuleSpecError)


@pytest.fixture
def workdir(monkeyifam, tmpdir):
    tdir = str(tmpdir / 'test_commands')
    shutil.copytree('tests/test_commands', tdir)
    monkeyifam.chdir(tdir)
    return tdir


def read_csv(path):
    with open(path, newline='') as f:
        return list(csv.DictReader(f))


def test_decode(workdir, capsys):
    ifam.ifam(['decode', '--rule', '54'])
    assert capsys.readouterr().out == ('{1,1} -> {1,0}\n'
                                       '{1,0} -> {2,1}\n'
                                       '{2,1} -> {1,1}\n'
                                       '{2,0} -> {2,0}\n')


def test_period(workdir, capsys):
    ifam.ifam(['period', '--rule', '54', '--w', '5'])
    out = capsys.readouterr().out.strip()
    assert out.startswith('period=21 transient=')
    assert out.endswith('class=Complex max=32')


def test_simulate(workdir):
    ifam.ifam(['simulate', '-c', 'experiment.yml', '--ticks', '100',
               '-o', 'series.csv'])
    rows = read_csv('series.csv')
    assert len(rows) == 100
    assert list(rows[0]) == ['tick', 'movement', 'change', 'price']
    assert rows[0]['tick'] == '1'
    price = 0
    for row in rows:
        price += int(row['change'])
        assert int(row['price']) == price


def test_simulate_full_cycle(workdir):
    ifam.ifam(['simulate', '--w', '6', '--full-cycle', '-o', 'cycle.csv'])
    rows = read_csv('cycle.csv')
    assert len(rows) == 63
    with pytest.raises(ArgsCombinationError):
        ifam.ifam(['simulate', '--full-cycle', '--ticks', '5'])


def test_simulate_init(workdir):
    ifam.ifam(['simulate', '--w', '3', '--init', 'DUU', '--ticks', '1',
               '--format', 'json', '-o', 'buy.json'])
    with open('buy.json') as f:
        assert json.load(f) == [{'tick': 1, 'movement': 1, 'change': 1,
                                 'price': 1}]


def test_table1(workdir):
    ifam.ifam(['table1', '--rule', '54', '--w', '5..12', '-o', 't1.csv'])
    rows = read_csv('t1.csv')
    assert [int(r['period']) for r in rows] == \
        [21, 63, 127, 63, 73, 889, 1533, 3255]
    assert [r['class'] for r in rows if r['class'] == 'Simple'] == \
        ['Simple', 'Simple']


def test_lookback_range_rejected(workdir):
    with pytest.raises(ArgsCombinationError):
        ifam.ifam(['period', '--w', '5..7'])


def test_scan(workdir, caplog):
    ifam.ifam(['scan', '--w', '7', '--format', 'json', '-o', 'scan.json'])
    with open('scan.json') as f:
        rows = json.load(f)
    assert len(rows) == 256
    assert [r['rule'] for r in rows if r['class'] != 'Simple'] == [54, 201]
    assert 'Complex rules: 2 (1 up to relabeling of states)' in caplog.text


def test_scan_rule_range(workdir):
    ifam.ifam(['scan', '--w', '6', '--rules', '50..59', '-o', 'part.csv'])
    assert [int(r['rule']) for r in read_csv('part.csv')] == \
        list(range(50, 60))


def test_table2(workdir):
    ifam.ifam(['table2', '-c', 'experiment.yml', '--w', '10',
               '-o', 't2.csv'])
    rows = read_csv('t2.csv')
    assert [int(r['ticks_per_day']) for r in rows] == [32, 64, 128]
    assert [int(r['days']) for r in rows] == [128, 64, 32]
    assert float(rows[-1]['se_skew']) == 0.1875


def test_baseline(workdir):
    ifam.ifam(['baseline', '-c', 'experiment.yml', '--seed', '3',
               '--conventional-se', '-o', 'rw.csv'])
    first = read_csv('rw.csv')
    ifam.ifam(['baseline', '-c', 'experiment.yml', '--seed', '3',
               '--conventional-se', '-o', 'rw2.csv'])
    assert read_csv('rw2.csv') == first
    assert float(first[0]['se_skew']) == pytest.approx((6 / 128) ** 0.5)


def read_bytes(path):
    with open(path, 'rb') as f:
        return f.read()


@pytest.mark.parametrize('args', [
    ['table1', '--w', '5..9'],
    ['scan', '--w', '6', '--workers', '2', '--format', 'json'],
    ['table2', '-c', 'experiment.yml', '--w', '10'],
    ['baseline', '-c', 'experiment.yml', '--seed', '11'],
])
def test_identical_output(workdir, args):
    ifam.ifam(args + ['-o', 'first.out'])
    ifam.ifam(args + ['-o', 'second.out'])
    first = read_bytes('first.out')
    assert first
    assert read_bytes('second.out') == first


def test_hist(workdir):
    ifam.ifam(['hist', '--w', '14', '-o', 'hist.csv'])
    rows = read_csv('hist.csv')
    assert len(rows) == 100
    assert sum(int(r['count']) for r in rows) == 128


def test_graph(workdir):
    ifam.ifam(['graph', '--w', '5', '-o', 'graph.csv'])
    rows = read_csv('graph.csv')
    assert len(rows) == 32
    assert list(rows[0]) == ['from_word', 'to_word', 'emitted_symbol']
    ifam.ifam(['graph', '--w', '3', '--words', '-o', 'words.csv'])
    assert read_csv('words.csv')[0] == {'from_word': 'DDD',
                                        'to_word': 'DDD',
                                        'emitted_symbol': '0'}


def test_attractors(workdir):
    ifam.ifam(['attractors', '--w', '7', '-o', 'cycles.csv'])
    rows = read_csv('cycles.csv')
    assert rows[0]['word'] == 'DDDDDDD'
    assert rows[0]['period'] == '1'
    assert [r['period'] for r in rows if r['class'] != 'Simple'] == ['127']


def test_gallery(workdir):
    ifam.ifam(['gallery', '--w', '6', '--limit', '1', '--ticks', '8',
               '-o', 'gallery.csv'])
    rows = read_csv('gallery.csv')
    assert [(r['rule'], r['tick']) for r in rows] == \
        [('54', str(t)) for t in range(1, 9)]


def test_reproduce_skip(workdir, monkeyifam):
    ifam.ifam(['reproduce', '-c', 'experiment.yml', '-o', 'results',
               '--skip', 'table1', '--skip', 'table2', '--skip', 'hist',
               '--skip', 'scan', '--skip', 'gallery'])
    assert os.listdir('results') == ['baseline.csv']


def test_work_dir(workdir, monkeyifam, tmpdir):
    outdir = str(tmpdir / 'out')
    monkeyifam.setenv('IFAM_WORK_DIR', outdir)
    ifam.ifam(['period', '--w', '5', '-o', 'period.txt'])
    assert os.path.exists(os.path.join(outdir, 'period.txt'))


def test_invalid_rule(workdir):
    with pytest.raises(RuleSpecError):
        ifam.ifam(['decode', '--rule', '256'])
    assert ifam.dispatch(['decode', '--rule', '256']) == 2


def test_resource_guard(workdir, caplog):
    with pytest.raises(ResourceGuardError):
        ifam.ifam(['period', '--w', '33'])
    assert ifam.dispatch(['period', '--w', '33']) == 1
    assert 'resource_guard states=8589934592 limit=4294967296' \
        in caplog.text


def test_usage_errors(workdir, capsys):
    with pytest.raises(SystemExit) as err:
        ifam.dispatch(['frobnicate'])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        ifam.dispatch(['period', '--bogus'])
    assert err.value.code == 2
    assert 'usage:' in capsys.readouterr().err
    assert ifam.dispatch([]) == 2
