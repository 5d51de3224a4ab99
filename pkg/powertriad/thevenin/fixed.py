#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 13.03.24
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
import numbers

# External modules
import numpy as np

# Internal modules
from powertriad.signals.generators import SinusoidSpec, gen_sinusoid
from powertriad.power.series import PowerSeries
from powertriad.power.summary import PowerSummary


logger = logging.getLogger(__name__)


class FixedImpedance(object):
    """
    The complex impedance Z = R + jX of a Thevenin equivalent circuit.

    Parameters
    ----------
    resistance : float
        The resistance R in ohm.
    reactance : float, optional
        The reactance X in ohm. Default is 0.
    """
    def __init__(self, resistance, reactance=0.):
        for name, value in (('resistance', resistance),
                            ('reactance', reactance)):
            if not isinstance(value, numbers.Real) or not np.isfinite(value):
                raise ValueError('The {0:s} needs to be a finite real number, '
                                 'got {1}!'.format(name, value))
        self.resistance = float(resistance)
        self.reactance = float(reactance)

    def __repr__(self):
        return 'FixedImpedance(R={0}, X={1})'.format(self.resistance,
                                                     self.reactance)

    @property
    def complex(self):
        return complex(self.resistance, self.reactance)

    @property
    def magnitude(self):
        return float(np.hypot(self.resistance, self.reactance))

    @property
    def angle(self):
        return float(np.arctan2(self.reactance, self.resistance))

    def check_nonzero(self):
        if self.magnitude == 0:
            raise ValueError('A zero impedance cannot constrain the source!')


def voltage_spec_fixed(impedance, i_spec):
    """
    The voltage sinusoid V exp(j theta) = Z I exp(j phi) of the circuit.
    """
    impedance.check_nonzero()
    return SinusoidSpec(impedance.magnitude * i_spec.amplitude,
                        i_spec.phase + impedance.angle, i_spec.omega0)


def voltage_from_current_fixed(impedance, i_spec, grid):
    """
    Drive a fixed impedance with a sinusoidal current.

    Parameters
    ----------
    impedance : FixedImpedance
        The impedance Z.
    i_spec : SinusoidSpec
        The current I cos(omega0 t + phi).
    grid : SamplingGrid
        The sampling grid.

    Returns
    -------
    v : RealWaveform
        The voltage with V = |Z| I and theta = phi + atan2(X, R).
    i : RealWaveform
        The current.

    Raises
    ------
    ValueError
        The impedance is zero.
    """
    v_spec = voltage_spec_fixed(impedance, i_spec)
    return (gen_sinusoid(v_spec, grid, unit='volt'),
            gen_sinusoid(i_spec, grid, unit='ampere'))


def power_from_impedance_fixed(impedance, I, phi, omega0, grid):
    """
    The power series and summary of a fixed impedance driven by the current
    I cos(omega0 t + phi).

    The Hermitian power is the constant Z I^2, the complementary power
    Z I^2 exp(j(2 omega0 t + 2 phi)). The active power
    R I^2 / 2 (1 + cos(2 omega0 t + 2 phi)) only depends on the resistance
    and the non-active power -X I^2 / 2 sin(2 omega0 t + 2 phi) only on the
    reactance, such that P = R I^2 / 2 is real power and Q = X I^2 / 2
    reactive power.

    Returns
    -------
    series : PowerSeries
        The power series on the grid.
    summary : PowerSummary
        The closed-form summary.
    """
    impedance.check_nonzero()
    grid.check_nyquist(omega0)
    rotation = 2 * omega0 * grid.times + 2 * phi
    hermitian = np.full(grid.n_samples, impedance.complex * I ** 2)
    complementary = hermitian * np.exp(1j * rotation)
    active = impedance.resistance * I ** 2 / 2 * (1 + np.cos(rotation))
    nonactive = -impedance.reactance * I ** 2 / 2 * np.sin(rotation)
    series = PowerSeries(grid, hermitian, complementary, active, nonactive)
    summary = PowerSummary.from_sinusoid(impedance.magnitude * I, I,
                                         phi + impedance.angle, phi)
    logger.debug('Fixed impedance {0} with I={1}: {2}'.format(impedance, I,
                                                              summary))
    return series, summary
