#!/bin/env python
# -*- coding: utf-8 -*-
"""
Created on 22.10.24

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
from powertriad.utilities.numerics import rms, wrap_angle
from powertriad.utilities.testcase import TestCase


logging.basicConfig(level=logging.DEBUG)


class TestNumerics(TestCase):
    def test_rms_real(self):
        self.assertAlmostEqual(rms([3., -3., 3., -3.]), 3.)
        self.assertAlmostEqual(rms(np.cos(np.linspace(0, 2 * np.pi, 64,
                                                      endpoint=False))),
                               np.sqrt(0.5))

    def test_rms_complex(self):
        self.assertAlmostEqual(rms([3 + 4j, -5.]), 5.)

    def test_rms_empty(self):
        self.assertEqual(rms([]), 0.)

    def test_wrap_scalar(self):
        self.assertIsInstance(wrap_angle(0.5), float)
        self.assertAlmostEqual(wrap_angle(3 * np.pi / 2), -np.pi / 2)
        self.assertAlmostEqual(wrap_angle(-np.pi), np.pi)
        self.assertAlmostEqual(wrap_angle(np.pi), np.pi)

    def test_wrap_array(self):
        angles = np.array([0., 2 * np.pi + 0.25, -2 * np.pi - 0.25])
        self.assertAllClose(wrap_angle(angles), [0., 0.25, -0.25],
                            rtol=1e-12, atol=1e-12)

    def test_relative_close(self):
        desired = np.sin(np.linspace(0, 2 * np.pi, 16))
        self.assertRelativeClose(desired + 1e-9, desired, 1e-8)
        with self.assertRaises(AssertionError):
            self.assertRelativeClose(desired + 1e-3, desired, 1e-8)

    def test_rms_below(self):
        self.assertRmsBelow(np.ones(4) * 1.01, np.ones(4), 0.02)
        with self.assertRaises(AssertionError):
            self.assertRmsBelow(np.ones(4) * 1.1, np.ones(4), 0.02)


if __name__ == '__main__':
    unittest.main()
