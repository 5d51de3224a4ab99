#!/bin/env python
# -*- coding: utf-8 -*-
"""
Created on 08.03.24

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
import json

# External modules
import numpy as np

# Internal modules
from powertriad.exceptions import DataError
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.generators import SinusoidSpec, gen_sinusoid
from powertriad.hilbert.spectral import phase_split
from powertriad.power.series import power_series
from powertriad.power.summary import PowerSummary, power_summary, \
    windowed_summaries, summary_fields
from powertriad.utilities.testcase import TestCase


logging.basicConfig(level=logging.DEBUG)


OMEGA0 = 2 * np.pi * 60


class TestPowerSummary(TestCase):
    def setUp(self):
        self.grid = SamplingGrid.for_periods(OMEGA0, 10, samples_per_period=64)
        self.series = self.sinusoidal_series(1., 1., 0., -np.pi / 3)

    def sinusoidal_series(self, V, I, theta, phi):
        v = gen_sinusoid(SinusoidSpec(V, theta, OMEGA0), self.grid,
                         unit='volt')
        i = gen_sinusoid(SinusoidSpec(I, phi, OMEGA0), self.grid,
                         unit='ampere')
        return power_series(phase_split(v), phase_split(i))

    def test_closed_form_power_triangle(self):
        summary = PowerSummary.from_sinusoid(1., 1., 0., -np.pi / 3)
        self.assertAlmostEqual(summary.apparent, 0.5, places=12)
        self.assertAlmostEqual(summary.active, 0.25, places=12)
        self.assertAlmostEqual(summary.nonactive, np.sqrt(3) / 4, places=12)
        self.assertAlmostEqual(summary.power_factor, 0.5, places=12)
        self.assertAlmostEqual(summary.power_angle, np.pi / 3, places=12)
        self.assertAlmostEqual(summary.negative_fraction, 1 / 3, places=12)

    def test_waveform_matches_closed_form(self):
        summary = power_summary(self.series)
        closed = power_summary((1., 1., 0., -np.pi / 3))
        self.assertAlmostEqual(summary.apparent, closed.apparent, places=12)
        self.assertAlmostEqual(summary.active, closed.active, places=12)
        self.assertAlmostEqual(summary.nonactive, closed.nonactive,
                               places=12)
        self.assertAlmostEqual(summary.power_factor, closed.power_factor,
                               places=12)
        self.assertAlmostEqual(summary.avg_positive, closed.avg_positive,
                               delta=2e-3)
        self.assertAlmostEqual(summary.avg_negative, closed.avg_negative,
                               delta=2e-3)
        self.assertAlmostEqual(summary.negative_fraction,
                               closed.negative_fraction, delta=2 / 64)

    def test_pythagoras_holds_for_sinusoids(self):
        summary = power_summary(self.series)
        self.assertAlmostEqual(
            summary.apparent ** 2 - summary.active ** 2 -
            summary.nonactive ** 2, 0., places=12)

    def test_capacitive_load_has_negative_nonactive_power(self):
        summary = power_summary(self.sinusoidal_series(1., 1., 0., 0.5))
        self.assertLess(summary.nonactive, 0.)
        self.assertAlmostEqual(summary.power_angle, -0.5, places=12)

    def test_zero_current_has_zero_power_factor(self):
        summary = power_summary(self.sinusoidal_series(1., 0., 0., 0.))
        self.assertEqual(summary.apparent, 0.)
        self.assertEqual(summary.power_factor, 0.)
        self.assertEqual(summary.power_angle, 0.)
        self.assertEqual(summary.negative_fraction, 0.)

    def test_window_restricts_average(self):
        summary = power_summary(self.series, window=(64, 128))
        self.assertAlmostEqual(summary.active, 0.25, places=12)
        with self.assertRaises(DataError):
            power_summary(self.series, window=(10, 10))

    def test_invalid_source_raises(self):
        with self.assertRaises(TypeError):
            power_summary('power')

    def test_json_export(self):
        summary = power_summary(self.series)
        decoded = json.loads(summary.to_json())
        self.assertSetEqual(set(decoded.keys()), set(summary_fields))
        self.assertAlmostEqual(decoded['active_P'], summary.active)

    def test_negative_fraction_is_bounded(self):
        with self.assertRaises(ValueError):
            PowerSummary(1., 1., 0., 1., 0., 1.5)


class TestWindowedSummaries(TestCase):
    def setUp(self):
        grid = SamplingGrid.for_periods(OMEGA0, 10, samples_per_period=64)
        v = gen_sinusoid(SinusoidSpec(2., 0., OMEGA0), grid, unit='volt')
        i = gen_sinusoid(SinusoidSpec(1., 0.4, OMEGA0), grid, unit='ampere')
        self.grid = grid
        self.series = power_series(phase_split(v), phase_split(i))

    def test_one_row_per_period(self):
        frame = windowed_summaries(self.series, 64)
        self.assertEqual(len(frame), 10)
        self.assertListEqual(list(frame.columns), ['t'] + summary_fields)
        np.testing.assert_allclose(frame['apparent_S'].values, 1.,
                                   rtol=1e-12)
        np.testing.assert_allclose(frame['t'].values,
                                   self.grid.times[::64])

    def test_partial_window_is_dropped(self):
        frame = windowed_summaries(self.series, 100)
        self.assertEqual(len(frame), 6)

    def test_threads_give_same_result(self):
        sequential = windowed_summaries(self.series, 64)
        threaded = windowed_summaries(self.series, 64, processes=2)
        np.testing.assert_array_equal(sequential.values, threaded.values)

    def test_invalid_windows_raise(self):
        with self.assertRaises(ValueError):
            windowed_summaries(self.series, 0)
        with self.assertRaises(DataError):
            windowed_summaries(self.series, 10000)
        with self.assertRaises(TypeError):
            windowed_summaries(None, 64)


if __name__ == '__main__':
    unittest.main()
