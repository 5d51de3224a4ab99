#!/bin/env python
# -*- coding: utf-8 -*-
"""
Created on 07.03.24

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
import pandas as pd

# Internal modules
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.generators import SinusoidSpec, gen_sinusoid
from powertriad.hilbert.fir import HilbertFirDesign, hilbert_fir, \
    phase_split_fir
from powertriad.utilities.testcase import TestCase


logging.basicConfig(level=logging.DEBUG)


OMEGA0 = 2 * np.pi * 60


class TestHilbertFirDesign(TestCase):
    def setUp(self):
        self.design = HilbertFirDesign(n_taps=63, window='blackman')

    def test_coefficients_are_anti_symmetric(self):
        coefficients = self.design.coefficients
        self.assertEqual(coefficients.size, 63)
        np.testing.assert_array_equal(coefficients, -coefficients[::-1])
        np.testing.assert_array_equal(coefficients[1::2], 0.)
        self.assertLess(self.design.dc_leakage, 1e-12)

    def test_delay_is_half_length(self):
        self.assertEqual(self.design.delay, 31)
        self.assertEqual(HilbertFirDesign().delay, 127)

    def test_invalid_designs_raise(self):
        with self.assertRaises(ValueError):
            HilbertFirDesign(n_taps=64)
        with self.assertRaises(ValueError):
            HilbertFirDesign(n_taps=1)
        with self.assertRaises(ValueError):
            HilbertFirDesign(window='kaiser')

    def test_design_is_immutable(self):
        with self.assertRaises(AttributeError):
            self.design.n_taps = 31

    def test_response_at_quarter_rate_is_minus_j(self):
        response = HilbertFirDesign(255).frequency_response(np.pi / 2, 1.)
        np.testing.assert_allclose(response, [-1j], atol=1e-2)

    def test_csv_export(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, 'taps.csv')
            self.design.to_csv(path)
            frame = pd.read_csv(path, float_precision='round_trip')
        self.assertListEqual(list(frame.columns), ['tap', 'coefficient'])
        self.assertEqual(frame['tap'].iloc[0], -31)
        np.testing.assert_allclose(frame['coefficient'].values,
                                   self.design.coefficients, rtol=1e-15)


class TestHilbertFir(TestCase):
    def setUp(self):
        self.grid = SamplingGrid.for_periods(OMEGA0, 40, samples_per_period=16)
        self.x = gen_sinusoid(SinusoidSpec(1., 0.2, OMEGA0), self.grid,
                              unit='volt')
        self.design = HilbertFirDesign(n_taps=255, window='hamming')

    def test_approximates_sine_outside_transient(self):
        x_hat = hilbert_fir(self.x, self.design)
        self.assertEqual(x_hat.attrs['transient'], (127, 127))
        valid = x_hat.valid_slice
        desired = np.sin(OMEGA0 * self.grid.times + 0.2)
        self.assertRmsBelow(x_hat.samples[valid], desired[valid], 1e-2)

    def test_phase_split_keeps_real_part(self):
        x_tilde = phase_split_fir(self.x, self.design)
        np.testing.assert_array_equal(x_tilde.real.samples, self.x.samples)
        self.assertEqual(x_tilde.attrs['transient'], (127, 127))

    def test_wrong_input_types_raise(self):
        with self.assertRaises(TypeError):
            hilbert_fir(self.x.samples, self.design)
        with self.assertRaises(TypeError):
            hilbert_fir(self.x, 255)


if __name__ == '__main__':
    unittest.main()
