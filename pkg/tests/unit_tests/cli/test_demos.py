#!/bin/env python
# -*- coding: utf-8 -*-
"""
Created on 21.10.24

Created for powertriad

    Copyright (C) {2024}  {powertriad developers}

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""
# System modules
import unittest
import logging
import os
import json
import tempfile
import io
import contextlib

# External modules
import pandas as pd

# Internal modules
from powertriad.cli.demos import DemoReport, available_demos
from powertriad.cli.main import main


logging.basicConfig(level=logging.DEBUG)


class TestDemoReport(unittest.TestCase):
    def setUp(self):
        self.report = DemoReport('test')

    def test_close_relation(self):
        self.report.add('a', 1. + 1e-10, 1., 'unit')
        self.assertTrue(self.report['a']['passed'])
        self.report.add('b', 1.1, 1., 'unit', tolerance=0.05)
        self.assertFalse(self.report['b']['passed'])
        self.assertFalse(self.report.passed)

    def test_greater_less(self):
        self.report.add('g', 2., 1., 'bound', relation='greater')
        self.report.add('l', 0.5, 1., 'bound', relation='less')
        self.assertTrue(self.report.passed)

    def test_unknown_relation_raises(self):
        with self.assertRaises(ValueError):
            self.report.add('x', 1., 1., 'unit', relation='equal')

    def test_missing_quantity_raises(self):
        with self.assertRaises(KeyError):
            _ = self.report['missing']

    def test_frame_and_dict(self):
        self.report.add('a', 1., 1., 'unit')
        frame = self.report.to_frame()
        self.assertIsInstance(frame, pd.DataFrame)
        self.assertListEqual(list(frame.columns), DemoReport.columns)
        content = self.report.to_dict()
        self.assertEqual(content['demo'], 'test')
        self.assertTrue(content['passed'])
        self.assertEqual(len(content['checks']), 1)
        json.dumps(content)


class TestDemoCommands(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp_dir.cleanup()

    def run_demo(self, name):
        with contextlib.redirect_stdout(io.StringIO()):
            exit_code = main(['demo', name, '--outdir', self.tmp_dir.name])
        report_path = os.path.join(
            self.tmp_dir.name, '{0:s}_report.json'.format(
                name.replace('-', '_')))
        with open(report_path) as fh:
            report = json.load(fh)
        self.assertEqual(report['demo'], name)
        self.assertEqual(report['passed'], exit_code == 0)
        self.assertTrue(os.path.isfile(report_path + '.manifest.json'))
        return exit_code, report

    def test_all_demos_available(self):
        self.assertSetEqual(
            set(available_demos),
            {'power-triangle', 'pos-neg', 'bedrosian', 'czarnecki',
             'thevenin-tv'})

    def test_power_triangle(self):
        exit_code, report = self.run_demo('power-triangle')
        self.assertEqual(exit_code, 0)
        table = pd.read_csv(os.path.join(self.tmp_dir.name,
                                         'power_triangle.csv'))
        self.assertEqual(len(table), 64)

    def test_pos_neg(self):
        exit_code, _ = self.run_demo('pos-neg')
        self.assertEqual(exit_code, 0)
        sweep = pd.read_csv(os.path.join(self.tmp_dir.name,
                                         'pos_neg_sweep.csv'))
        self.assertEqual(len(sweep), 5)

    def test_bedrosian(self):
        exit_code, _ = self.run_demo('bedrosian')
        self.assertEqual(exit_code, 0)

    def test_czarnecki(self):
        exit_code, report = self.run_demo('czarnecki')
        self.assertEqual(exit_code, 0)
        gap = [c for c in report['checks'] if c['quantity'] == 'gap'][0]
        self.assertGreater(gap['computed'], 0.)

    def test_thevenin_tv(self):
        exit_code, report = self.run_demo('thevenin-tv')
        checks = {c['quantity']: c for c in report['checks']}
        for name in ('S', 'P', 'Q'):
            self.assertTrue(checks['fixed {0:s} closed'.format(name)][
                'passed'])
        self.assertTrue(os.path.isfile(os.path.join(self.tmp_dir.name,
                                                    'thevenin_tv.csv')))


if __name__ == '__main__':
    unittest.main()
