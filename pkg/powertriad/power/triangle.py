#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 12.03.24
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

# External modules
import numpy as np
import pandas as pd

# Internal modules


logger = logging.getLogger(__name__)


triangle_columns = ['t', 'fixed_re', 'fixed_im', 'corner_re', 'corner_im',
                    'tip_re', 'tip_im', 'p', 'p_active', 'p_nonactive']


def rotating_triangle(V, I, theta, phi, omega0, grid):
    """
    Tabulate the rotating power triangle of a sinusoidal pair.

    The fixed phasor F = 1/2 p_H = (V I / 2) exp(j Delta) points to the
    center of rotation. The rotating phasor 1/2 p_C = F exp(j psi) with
    psi = 2 omega0 t + 2 phi is the hypotenuse of the triangle, its legs are
    F cos(psi) along F and j F sin(psi) perpendicular to F. The projections
    onto the real axis are the instantaneous power (tip), the active power
    (corner) and their difference, the non-active power.

    Parameters
    ----------
    V, I : float
        The amplitudes of voltage and current.
    theta, phi : float
        The phases of voltage and current in radians.
    omega0 : float
        The radian frequency.
    grid : SamplingGrid
        The sample times of the table.

    Returns
    -------
    table : pandas.DataFrame
        The columns t, fixed_re, fixed_im, corner_re, corner_im, tip_re,
        tip_im, p, p_active and p_nonactive.
    """
    times = grid.times
    fixed = V * I / 2 * np.exp(1j * (theta - phi))
    psi = 2 * omega0 * times + 2 * phi
    corner = fixed + fixed * np.cos(psi)
    tip = fixed + fixed * np.exp(1j * psi)
    fixed = np.full(times.shape, fixed)
    return pd.DataFrame({
        't': times,
        'fixed_re': fixed.real,
        'fixed_im': fixed.imag,
        'corner_re': corner.real,
        'corner_im': corner.imag,
        'tip_re': tip.real,
        'tip_im': tip.imag,
        'p': tip.real,
        'p_active': corner.real,
        'p_nonactive': tip.real - corner.real,
    }, columns=triangle_columns)
