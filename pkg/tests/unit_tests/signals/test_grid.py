#!/bin/env python
# -*- coding: utf-8 -*-
"""
Created on 05.03.24

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

# External modules
import numpy as np

# Internal modules
from powertriad.exceptions import DataError, NumericValidityError
from powertriad.signals.grid import SamplingGrid


logging.basicConfig(level=logging.DEBUG)


class TestSamplingGrid(unittest.TestCase):
    def setUp(self):
        self.grid = SamplingGrid(19200, 320)

    def test_times_start_at_t0_and_use_sample_rate(self):
        grid = SamplingGrid(100., 5, t0=2.)
        np.testing.assert_allclose(grid.times, [2., 2.01, 2.02, 2.03, 2.04])

    def test_duration_is_samples_divided_by_rate(self):
        self.assertAlmostEqual(self.grid.duration, 320 / 19200)

    def test_grid_is_immutable(self):
        with self.assertRaises(AttributeError):
            self.grid.sample_rate = 100
        with self.assertRaises(AttributeError):
            self.grid.n_samples = 10

    def test_invalid_values_raise_value_error(self):
        with self.assertRaises(ValueError):
            SamplingGrid(0, 10)
        with self.assertRaises(ValueError):
            SamplingGrid(100, 0)
        with self.assertRaises(ValueError):
            SamplingGrid(100, 2.5)
        with self.assertRaises(ValueError):
            SamplingGrid(100, 10, t0=np.nan)

    def test_check_nyquist_rejects_frequency_at_half_rate(self):
        self.grid.check_nyquist(2 * np.pi * 9599)
        with self.assertRaises(NumericValidityError):
            self.grid.check_nyquist(np.pi * 19200)

    def test_for_periods_with_sample_rate_rounds_samples(self):
        grid = SamplingGrid.for_periods(376.99, 10, sample_rate=19200)
        self.assertEqual(grid.n_samples, 3200)

    def test_for_periods_with_samples_per_period(self):
        omega0 = 2 * np.pi * 50
        grid = SamplingGrid.for_periods(omega0, 4, samples_per_period=64)
        self.assertEqual(grid.n_samples, 256)
        self.assertAlmostEqual(grid.sample_rate, 3200)
        self.assertTrue(grid.is_integer_period(omega0))
        self.assertAlmostEqual(grid.periods(omega0), 4)

    def test_for_periods_needs_rate_or_samples(self):
        with self.assertRaises(ValueError):
            SamplingGrid.for_periods(100., 2)

    def test_equal_grids_are_aligned(self):
        self.grid.check_aligned(SamplingGrid(19200, 320))
        with self.assertRaises(DataError):
            self.grid.check_aligned(SamplingGrid(19200, 321))

    def test_subgrid_shifts_start_time(self):
        subgrid = self.grid.subgrid(10, 20)
        self.assertEqual(subgrid.n_samples, 10)
        np.testing.assert_allclose(subgrid.times, self.grid.times[10:20])
        with self.assertRaises(ValueError):
            self.grid.subgrid(10, 400)

    def test_omega_are_one_sided_bins(self):
        grid = SamplingGrid(8., 8)
        np.testing.assert_allclose(grid.omega, 2 * np.pi * np.arange(5))


if __name__ == '__main__':
    unittest.main()
