#!/bin/env python
# -*- coding: utf-8 -*-
"""
Created on 06.03.24

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
import tempfile

# External modules
import numpy as np

# Internal modules
from powertriad.exceptions import DataError
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.waveform import RealWaveform
from powertriad.signals.io import grid_from_times, read_waveform_csv, \
    iter_waveform_csv, write_waveform_csv, read_raw_pairs, iter_raw_pairs, \
    write_raw_pairs, check_stream_times


logging.basicConfig(level=logging.DEBUG)
RandomState = np.random.RandomState(42)


class TestWaveformCsv(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp_dir.name, 'wave.csv')
        self.grid = SamplingGrid(1000., 50, t0=0.25)
        self.voltage = RealWaveform(self.grid, RandomState.normal(size=50),
                                    unit='volt')
        self.current = RealWaveform(self.grid, RandomState.normal(size=50),
                                    unit='ampere')

    def tearDown(self):
        self.tmp_dir.cleanup()

    def write(self, text):
        with open(self.path, 'w') as fh:
            fh.write(text)

    def test_written_values_are_read_back_exactly(self):
        write_waveform_csv(self.path, self.voltage, self.current)
        voltage, current = read_waveform_csv(self.path)
        np.testing.assert_array_equal(voltage.samples, self.voltage.samples)
        np.testing.assert_array_equal(current.samples, self.current.samples)
        self.assertAlmostEqual(voltage.grid.sample_rate, 1000., places=6)
        self.assertEqual(voltage.grid.t0, 0.25)
        self.assertEqual(voltage.unit, 'volt')

    def test_seventeen_digits_are_read_back_exactly(self):
        grid = SamplingGrid(19200., 2000)
        voltage = RealWaveform(grid, RandomState.normal(size=2000))
        current = RealWaveform(grid, RandomState.normal(size=2000) * 1e-7)
        write_waveform_csv(self.path, voltage, current)
        read_voltage, read_current = read_waveform_csv(self.path)
        np.testing.assert_array_equal(read_voltage.samples, voltage.samples)
        np.testing.assert_array_equal(read_current.samples, current.samples)

    def test_non_finite_value_reports_line(self):
        self.write('t,v\n0,1\n0.1,2\n0.2,inf\n')
        with self.assertRaisesRegex(DataError, 'line 4'):
            read_waveform_csv(self.path)

    def test_header_is_t_v_i(self):
        write_waveform_csv(self.path, self.voltage, self.current)
        with open(self.path) as fh:
            self.assertEqual(fh.readline().strip(), 't,v,i')

    def test_missing_current_column(self):
        write_waveform_csv(self.path, self.voltage)
        _, current = read_waveform_csv(self.path)
        self.assertIsNone(current)

    def test_wrong_header_raises(self):
        self.write('time,v\n0,1\n1,2\n')
        with self.assertRaises(DataError):
            read_waveform_csv(self.path)

    def test_malformed_value_reports_line(self):
        self.write('t,v\n0,1\n0.1,abc\n0.2,3\n')
        with self.assertRaisesRegex(DataError, 'line 3'):
            read_waveform_csv(self.path)

    def test_non_uniform_time_axis_raises(self):
        self.write('t,v\n0,1\n0.1,2\n0.25,3\n0.3,4\n')
        with self.assertRaises(DataError):
            read_waveform_csv(self.path)

    def test_empty_file_raises(self):
        self.write('')
        with self.assertRaises(DataError):
            read_waveform_csv(self.path)

    def test_iter_yields_chunks(self):
        write_waveform_csv(self.path, self.voltage, self.current)
        chunks = list(iter_waveform_csv(self.path, 20))
        self.assertEqual([len(c[0]) for c in chunks], [20, 20, 10])
        np.testing.assert_array_equal(np.concatenate([c[1] for c in chunks]),
                                      self.voltage.samples)
        np.testing.assert_array_equal(np.concatenate([c[2] for c in chunks]),
                                      self.current.samples)

    def test_iter_needs_current(self):
        write_waveform_csv(self.path, self.voltage)
        with self.assertRaises(DataError):
            list(iter_waveform_csv(self.path, 20))


class TestCheckStreamTimes(unittest.TestCase):
    def setUp(self):
        self.times = np.arange(50) / 1000. + 0.25

    def chunks(self, times):
        return [(times[k:k + 20], np.zeros(times[k:k + 20].size),
                 np.zeros(times[k:k + 20].size))
                for k in range(0, times.size, 20)]

    def test_uniform_chunks_pass(self):
        checked = list(check_stream_times(self.chunks(self.times), 1000.,
                                          0.25))
        self.assertEqual([len(c[0]) for c in checked], [20, 20, 10])

    def test_jitter_in_later_chunk_reports_line(self):
        times = self.times.copy()
        times[30] += 0.2e-3
        checked = check_stream_times(self.chunks(times), 1000., 0.25)
        self.assertEqual(len(next(checked)[0]), 20)
        with self.assertRaisesRegex(DataError, 'line 32'):
            next(checked)

    def test_missing_sample_at_chunk_border_reports_line(self):
        times = np.delete(self.times, 20)
        with self.assertRaisesRegex(DataError, 'line 22'):
            list(check_stream_times(self.chunks(times), 1000., 0.25))

    def test_wrong_sample_rate_raises(self):
        with self.assertRaises(DataError):
            list(check_stream_times(self.chunks(self.times), 1001., 0.25))


class TestGridFromTimes(unittest.TestCase):
    def test_uniform_times(self):
        grid = grid_from_times(np.arange(5) * 0.5 + 1)
        self.assertEqual(grid.n_samples, 5)
        self.assertAlmostEqual(grid.sample_rate, 2.)
        self.assertEqual(grid.t0, 1.)

    def test_decreasing_or_single_times_raise(self):
        with self.assertRaises(DataError):
            grid_from_times([1., 0.])
        with self.assertRaises(DataError):
            grid_from_times([1.])


class TestRawPairs(unittest.TestCase):
    def setUp(self):
        self.tmp_dir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp_dir.name, 'wave.bin')
        grid = SamplingGrid(100., 30)
        self.voltage = RealWaveform(grid, RandomState.normal(size=30))
        self.current = RealWaveform(grid, RandomState.normal(size=30))
        write_raw_pairs(self.path, self.voltage, self.current)

    def tearDown(self):
        self.tmp_dir.cleanup()

    def test_read_interleaved_pairs(self):
        voltage, current = read_raw_pairs(self.path, 100., t0=1.)
        np.testing.assert_equal(voltage.samples, self.voltage.samples)
        np.testing.assert_equal(current.samples, self.current.samples)
        self.assertEqual(voltage.grid.t0, 1.)
        self.assertEqual(current.unit, 'ampere')

    def test_file_is_little_endian_float64(self):
        raw = np.fromfile(self.path, dtype='<f8')
        self.assertEqual(raw.size, 60)
        self.assertEqual(raw[0], self.voltage.samples[0])
        self.assertEqual(raw[1], self.current.samples[0])

    def test_iter_raw_pairs(self):
        chunks = list(iter_raw_pairs(self.path, 8))
        self.assertEqual([len(c[0]) for c in chunks], [8, 8, 8, 6])
        np.testing.assert_equal(np.concatenate([c[1] for c in chunks]),
                                self.current.samples)


if __name__ == '__main__':
    unittest.main()
