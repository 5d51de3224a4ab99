#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 05.03.24
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

"""
Small numerical helpers shared by the signal, power and meter packages.
"""

# System modules
import logging

# External modules
import numpy as np
import scipy.fft

# Internal modules
from powertriad.exceptions import DataError


logger = logging.getLogger(__name__)


ENERGY_FRACTION = 0.999


def rms(values):
    """
    Root mean square of a real or complex array.
    """
    values = np.asarray(values)
    if values.size == 0:
        return 0.
    return float(np.sqrt(np.mean(np.abs(values)**2)))


def wrap_angle(angle):
    """
    Normalize angles into the interval (-pi, pi].
    """
    wrapped = np.pi - np.mod(np.pi - np.asarray(angle, dtype=float),
                             2 * np.pi)
    if wrapped.ndim == 0:
        return float(wrapped)
    return wrapped




def envelope_bandwidth(envelope, sample_rate, fraction=ENERGY_FRACTION):
    """
    Estimate the bandwidth of a (complex) envelope as the smallest radian
    frequency Omega, such that the frequencies |omega| <= Omega contain the
    given fraction of the envelope energy.

    Parameters
    ----------
    envelope : array_like
        The envelope samples, either real or complex.
    sample_rate : float
        The sampling rate in samples/s.
    fraction : float, optional
        The energy fraction. Default is 0.999.

    Returns
    -------
    bandwidth : float
        The estimated bandwidth in rad/s. A zero envelope has zero
        bandwidth.

    Raises
    ------
    DataError
        The envelope is empty.
    """
    envelope = np.asarray(envelope)
    if envelope.size == 0:
        raise DataError('Cannot estimate the bandwidth of an empty '
                        'envelope!')
    if not 0 < fraction <= 1:
        raise ValueError('The energy fraction needs to be within (0, 1]!')
    energy = np.abs(scipy.fft.fft(envelope)) ** 2
    total = np.sum(energy)
    if total == 0:
        return 0.
    omega = np.abs(2 * np.pi * scipy.fft.fftfreq(envelope.size,
                                                 d=1. / sample_rate))
    order = np.argsort(omega, kind='stable')
    cumulated = np.cumsum(energy[order]) / total
    reached = np.searchsorted(cumulated, fraction * (1 - 1e-12))
    reached = min(reached, envelope.size - 1)
    bandwidth = float(omega[order][reached])
    logger.debug('Envelope bandwidth with {0:.4g} of the energy: {1:.6g} '
                 'rad/s'.format(fraction, bandwidth))
    return bandwidth
