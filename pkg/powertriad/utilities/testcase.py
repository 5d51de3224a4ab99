#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 04.03.24
#
#Created for powertriad
#
#    Copyright (C) {2024}  {powertriad developers}
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

# System modules
import logging
import unittest

# External modules
import numpy as np

# Internal modules
from .numerics import rms


logger = logging.getLogger(__name__)


class TestCase(unittest.TestCase):
    def assertMethod(self, obj, method):
        self.assertTrue(hasattr(obj, method),
                        '{0:s} has not \'{1:s}\' as attribute'.format(
                            str(type(obj)), method))
        self.assertTrue(callable(getattr(obj, method)),
                        '{0:s} is not a callable method in {1:s}'.format(
                            method, str(type(obj))))

    def assertAllClose(self, actual, desired, rtol=1e-12, atol=0.):
        np.testing.assert_allclose(actual, desired, rtol=rtol, atol=atol)

    def assertRelativeClose(self, actual, desired, rtol):
        """
        The maximum absolute deviation relative to the maximum magnitude of
        the desired values needs to be smaller than rtol. In contrast to
        assertAllClose, zero crossings of the desired values are not
        penalized.
        """
        actual = np.asarray(actual)
        desired = np.asarray(desired)
        scale = max(float(np.max(np.abs(desired), initial=0.)), 1e-300)
        deviation = float(np.max(np.abs(actual - desired), initial=0.))
        self.assertLessEqual(
            deviation / scale, rtol,
            'Relative deviation {0:.3e} exceeds {1:.3e}'.format(
                deviation / scale, rtol))

    def assertRmsBelow(self, actual, desired, bound):
        deviation = rms(np.asarray(actual) - np.asarray(desired))
        self.assertLessEqual(
            deviation, bound,
            'RMS deviation {0:.3e} exceeds {1:.3e}'.format(deviation, bound))
