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
import numpy as np
import pandas as pd

# Internal modules
from powertriad.cli.main import main, build_parser


logging.basicConfig(level=logging.DEBUG)


PHI = -np.pi / 3


class TestMain(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.TemporaryDirectory()
        self.waveform = self.path('waveform.csv')

    def tearDown(self):
        self.tmp_dir.cleanup()

    def path(self, name):
        return os.path.join(self.tmp_dir.name, name)

    def run_main(self, argv):
        with contextlib.redirect_stdout(io.StringIO()) as out:
            exit_code = main(argv)
        return exit_code, out.getvalue()

    def generate(self):
        exit_code, _ = self.run_main([
            'generate', 'sinusoid', '--fs', '19200', '--v', '1', '--i', '1',
            '--phi', repr(PHI), '-o', self.waveform])
        self.assertEqual(exit_code, 0)

    def test_build_parser_lists_commands(self):
        parser, parsers = build_parser()
        args = parser.parse_args(['spectrum', 'in.csv'])
        self.assertEqual(args.command, 'spectrum')
        self.assertEqual(args.input, 'in.csv')
        self.assertTrue(len(parsers) > 4)

    def test_generate_writes_waveform_and_manifest(self):
        self.generate()
        frame = pd.read_csv(self.waveform)
        self.assertListEqual(list(frame.columns), ['t', 'v', 'i'])
        self.assertEqual(len(frame), 3200)
        with open(self.waveform + '.manifest.json') as fh:
            manifest = json.load(fh)
        self.assertEqual(manifest['command'], 'generate sinusoid')
        self.assertEqual(manifest['outputs'][0]['path'], self.waveform)
        self.assertEqual(len(manifest['outputs'][0]['sha256']), 64)

    def test_generate_missing_sample_rate_is_usage_error(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                main(['generate', 'sinusoid', '-o', self.waveform])
        self.assertEqual(cm.exception.code, 2)

    def test_generate_harmonic_bad_term_is_usage_error(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                main(['generate', 'harmonic', '--fs', '19200', '--term',
                      '1,1', '-o', self.waveform])
        self.assertEqual(cm.exception.code, 2)

    def test_generate_wide_modulation_is_numeric_error(self):
        exit_code, _ = self.run_main([
            'generate', 'modulated', '--fs', '19200', '--v', '1',
            '--mod-ratio', '1.5', '--am-depth', '0.5', '-o', self.waveform])
        self.assertEqual(exit_code, 4)
        self.assertFalse(os.path.isfile(self.waveform))

    def test_config_provides_required_option(self):
        config = self.path('run.cfg')
        with open(config, 'w') as fh:
            fh.write('# sampling\nfs = 19200\n')
        exit_code, _ = self.run_main([
            '--config', config, 'generate', 'sinusoid', '--v', '1', '-o',
            self.waveform])
        self.assertEqual(exit_code, 0)
        self.assertEqual(len(pd.read_csv(self.waveform)), 3200)

    def test_config_value_outside_choices_is_data_error(self):
        self.generate()
        config = self.path('run.cfg')
        with open(config, 'w') as fh:
            fh.write('hilbert = "foo"\n')
        exit_code, _ = self.run_main([
            '--config', config, 'analyze', self.waveform, '-o',
            self.path('series.csv'), '--summary', self.path('summary.json')])
        self.assertEqual(exit_code, 3)
        self.assertFalse(os.path.isfile(self.path('series.csv')))

    def test_config_value_within_choices_is_used(self):
        self.generate()
        config = self.path('run.cfg')
        with open(config, 'w') as fh:
            fh.write('hilbert = "spectral"\nfir_window = "blackman"\n')
        exit_code, _ = self.run_main([
            '--config', config, 'analyze', self.waveform, '-o',
            self.path('series.csv'), '--summary', self.path('summary.json')])
        self.assertEqual(exit_code, 0)

    def test_missing_config_is_data_error(self):
        exit_code, _ = self.run_main([
            '--config', self.path('missing.cfg'), 'generate', 'sinusoid',
            '--fs', '19200', '-o', self.waveform])
        self.assertEqual(exit_code, 3)

    def test_analyze_summary(self):
        self.generate()
        series = self.path('series.csv')
        summary = self.path('summary.json')
        exit_code, out = self.run_main([
            'analyze', self.waveform, '-o', series, '--summary', summary])
        self.assertEqual(exit_code, 0)
        with open(summary) as fh:
            content = json.load(fh)
        self.assertAlmostEqual(content['apparent_S'], 0.5, places=9)
        self.assertAlmostEqual(content['active_P'], 0.25, places=9)
        self.assertAlmostEqual(content['nonactive_Q'], np.sqrt(3) / 4,
                               places=9)
        self.assertAlmostEqual(content['power_factor'], 0.5, places=9)
        self.assertAlmostEqual(json.loads(out)['active_P'], 0.25, places=9)
        self.assertTrue(os.path.isfile(series + '.manifest.json'))

    def test_analyze_windows(self):
        self.generate()
        windows = self.path('windows.csv')
        exit_code, _ = self.run_main([
            'analyze', self.waveform, '-o', self.path('series.csv'),
            '--summary', self.path('summary.json'), '--window',
            repr(1 / 60), '--windows-output', windows])
        self.assertEqual(exit_code, 0)
        frame = pd.read_csv(windows)
        self.assertEqual(len(frame), 10)

    def test_analyze_missing_input_is_data_error(self):
        exit_code, _ = self.run_main([
            'analyze', self.path('missing.csv'), '-o',
            self.path('series.csv'), '--summary', self.path('summary.json')])
        self.assertEqual(exit_code, 3)

    def test_analyze_without_current_is_data_error(self):
        self.run_main(['generate', 'sinusoid', '--fs', '19200', '--v', '1',
                       '-o', self.waveform])
        exit_code, _ = self.run_main([
            'analyze', self.waveform, '-o', self.path('series.csv'),
            '--summary', self.path('summary.json')])
        self.assertEqual(exit_code, 3)

    def test_spectrum_single_tone_has_no_gap(self):
        self.generate()
        report = self.path('gap.json')
        exit_code, out = self.run_main([
            'spectrum', self.waveform, '-o', self.path('triangles.csv'),
            '--report', report])
        self.assertEqual(exit_code, 0)
        with open(report) as fh:
            content = json.load(fh)
        self.assertEqual(content['n_bins'], 1)
        self.assertAlmostEqual(content['lhs'], 0.25, places=9)
        self.assertAlmostEqual(content['gap'], 0., places=9)
        self.assertTrue(out.startswith('lhs='))

    def test_meter_needs_carrier(self):
        self.generate()
        exit_code, _ = self.run_main([
            'meter', self.waveform, '-o', self.path('records.ndjson')])
        self.assertEqual(exit_code, 2)

    def test_meter_ndjson_records(self):
        self.generate()
        records = self.path('records.ndjson')
        exit_code, _ = self.run_main([
            'meter', self.waveform, '--omega0', repr(2 * np.pi * 60),
            '--block-size', '640', '-o', records])
        self.assertEqual(exit_code, 0)
        with open(records) as fh:
            lines = [json.loads(line) for line in fh if line.strip()]
        self.assertEqual(len(lines), 5)
        for record in lines:
            self.assertAlmostEqual(record['S'], 0.5, places=6)
            self.assertAlmostEqual(record['P'], 0.25, places=6)

    def test_meter_rejects_missing_line_in_later_chunk(self):
        self.generate()
        with open(self.waveform) as fh:
            lines = fh.readlines()
        del lines[1001]
        with open(self.waveform, 'w') as fh:
            fh.writelines(lines)
        exit_code, _ = self.run_main([
            'meter', self.waveform, '--omega0', repr(2 * np.pi * 60),
            '--block-size', '640', '-o', self.path('records.ndjson')])
        self.assertEqual(exit_code, 3)

    def test_meter_short_estimation_block_is_usage_error(self):
        self.generate()
        exit_code, _ = self.run_main([
            'meter', self.waveform, '--estimate-omega0', '--omega0',
            repr(2 * np.pi * 60), '--block-size', '640', '-o',
            self.path('records.ndjson')])
        self.assertEqual(exit_code, 2)

    def test_meter_csv_records(self):
        self.generate()
        records = self.path('records.csv')
        exit_code, _ = self.run_main([
            'meter', self.waveform, '--omega0', repr(2 * np.pi * 60),
            '--block-size', '640', '--csv', '-o', records])
        self.assertEqual(exit_code, 0)
        self.assertEqual(len(pd.read_csv(records)), 5)


if __name__ == '__main__':
    unittest.main()
