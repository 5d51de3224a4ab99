#!/bin/env python
# -*- coding: utf-8 -*-
"""
Created on 14.03.24

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
from powertriad.hilbert.fir import HilbertFirDesign
from powertriad.meter.config import MeterConfig


logging.basicConfig(level=logging.DEBUG)


OMEGA0 = 2 * np.pi * 60


class TestMeterConfig(unittest.TestCase):
    def test_defaults(self):
        config = MeterConfig(19200, 3200, omega0=OMEGA0)
        self.assertEqual(config.hilbert, 'spectral')
        self.assertEqual(config.fir_design, HilbertFirDesign())
        self.assertEqual(config.smoothing, 0.2)
        self.assertEqual(config.queue_size, 8)
        self.assertListEqual(config.sinks, [])
        self.assertFalse(config.estimate)
        self.assertAlmostEqual(config.block_duration, 1 / 6)

    def test_missing_carrier_is_estimated(self):
        self.assertTrue(MeterConfig(19200, 3200).estimate)

    def test_whole_float_block_size_is_accepted(self):
        self.assertEqual(MeterConfig(19200, 3200.).block_size, 3200)
        with self.assertRaises(ValueError):
            MeterConfig(19200, 3200.5)
        with self.assertRaises(ValueError):
            MeterConfig(19200, 1)

    def test_fir_block_needs_filter_length(self):
        with self.assertRaises(ValueError):
            MeterConfig(19200, 100, hilbert='fir')
        config = MeterConfig(19200, 100, hilbert='fir',
                             fir_design=HilbertFirDesign(63))
        self.assertEqual(config.fir_design.n_taps, 63)

    def test_invalid_values_raise(self):
        with self.assertRaises(ValueError):
            MeterConfig(0, 3200)
        with self.assertRaises(ValueError):
            MeterConfig(19200, 3200, omega0=-1.)
        with self.assertRaises(ValueError):
            MeterConfig(19200, 3200, hilbert='analytic')
        with self.assertRaises(ValueError):
            MeterConfig(19200, 3200, smoothing=0.)
        with self.assertRaises(ValueError):
            MeterConfig(19200, 3200, queue_size=0)
        with self.assertRaises(TypeError):
            MeterConfig(19200, 3200, fir_design=255)

    def test_estimation_block_needs_four_nominal_periods(self):
        with self.assertRaises(ValueError):
            MeterConfig(19200, 960, nominal_omega0=OMEGA0)
        config = MeterConfig(19200, 1600, nominal_omega0=OMEGA0)
        self.assertTrue(config.estimate)
        self.assertEqual(config.nominal_omega0, OMEGA0)
        with self.assertRaises(ValueError):
            MeterConfig(19200, 3200, nominal_omega0=0.)
        fixed = MeterConfig(19200, 320, omega0=OMEGA0, nominal_omega0=OMEGA0)
        self.assertFalse(fixed.estimate)

    def test_fractional_periods_are_logged(self):
        with self.assertLogs('powertriad.meter.config', level='WARNING'):
            MeterConfig(19200, 3000, omega0=OMEGA0)


if __name__ == '__main__':
    unittest.main()
