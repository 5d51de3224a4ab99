#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 11.03.24
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

# Internal modules
from powertriad.exceptions import DataError
from powertriad.signals.waveform import RealWaveform
from powertriad.utilities.numerics import wrap_angle


logger = logging.getLogger(__name__)


DEGENERATE_RTOL = 1e-14


def active_nonactive_split(hermitian, complementary):
    """
    Split the instantaneous power into active and non-active power.

    With the angle psi(t) between the complementary and the Hermitian power,
    p_C = p_H exp(j psi), the instantaneous power is

        p = 1/2 Re{p_H} (1 + cos psi) - 1/2 Im{p_H} sin psi,

    where the first term is the active and the second term the non-active
    power. For sinusoids psi = 2 omega0 t + 2 phi, so no carrier estimate is
    needed.

    Parameters
    ----------
    hermitian : array_like
        The complex Hermitian power.
    complementary : array_like
        The complex complementary power.

    Returns
    -------
    active : numpy.ndarray
        The active power.
    nonactive : numpy.ndarray
        The non-active power.
    degenerate : numpy.ndarray
        Boolean mask of the samples with vanishing Hermitian power. There psi
        is undefined, the active power is set to the instantaneous power and
        the non-active power to zero.

    Raises
    ------
    DataError
        The series are not aligned.
    """
    hermitian = np.asarray(hermitian, dtype=complex)
    complementary = np.asarray(complementary, dtype=complex)
    if hermitian.shape != complementary.shape:
        raise DataError('The Hermitian and the complementary power are not '
                        'aligned!')
    magnitude = np.abs(hermitian)
    peak = np.max(magnitude, initial=0.)
    degenerate = magnitude <= DEGENERATE_RTOL * peak
    safe_square = np.where(degenerate, 1., magnitude ** 2)
    rotation = complementary * np.conj(hermitian) / safe_square
    active = 0.5 * hermitian.real * (1 + rotation.real)
    nonactive = -0.5 * hermitian.imag * rotation.imag
    if np.any(degenerate):
        instantaneous = 0.5 * (hermitian.real + complementary.real)
        active = np.where(degenerate, instantaneous, active)
        nonactive = np.where(degenerate, 0., nonactive)
        logger.warning('{0:d} of {1:d} samples have a vanishing Hermitian '
                       'power, the active/non-active split is flagged as '
                       'degenerate there'.format(int(np.sum(degenerate)),
                                                 degenerate.size))
    return active, nonactive, degenerate


def positive_negative_split(p):
    """
    Split the instantaneous power into positive power max(p, 0), delivered
    to the load, and negative power min(p, 0), returned to the source. The
    sum of both reconstructs p exactly.

    Parameters
    ----------
    p : RealWaveform or array_like
        The instantaneous power.

    Returns
    -------
    positive : RealWaveform or numpy.ndarray
    negative : RealWaveform or numpy.ndarray
        Same type as the input.
    """
    if isinstance(p, RealWaveform):
        positive, negative = positive_negative_split(p.samples)
        return p.with_samples(positive), p.with_samples(negative)
    p = np.asarray(p, dtype=float)
    return np.maximum(p, 0.), np.minimum(p, 0.)


def _power_angle(theta, phi):
    return wrap_angle(theta - phi)


def closed_form_pos_neg_averages(V, I, theta, phi):
    """
    The closed-form averages of positive and negative power of a sinusoidal
    pair over one period. With Delta = theta - phi normalized into
    (-pi, pi],

        P- = -(V I / 2) [sin|Delta| / pi - (|Delta| / pi) cos Delta],
        P+ = (V I / 2) cos Delta - P-.

    The average only depends on cos Delta, hence the absolute value.

    Returns
    -------
    avg_positive : float
    avg_negative : float
    """
    delta = abs(_power_angle(theta, phi))
    scale = V * I / 2
    avg_negative = -scale * (np.sin(delta) / np.pi -
                             delta / np.pi * np.cos(delta))
    avg_positive = scale * np.cos(delta) - avg_negative
    return float(avg_positive), float(avg_negative)


def delivery_fraction(theta, phi):
    """
    The fraction of a period during which a sinusoidal pair delivers power to
    the load, 1 - |theta - phi| / pi.
    """
    return 1. - abs(_power_angle(theta, phi)) / np.pi


def sinusoidal_power_terms(V, I, theta, phi, omega0, grid):
    """
    The three closed-form terms of the instantaneous power of a sinusoidal
    pair, (V I / 2) cos Delta, the in-phase oscillation
    (V I / 2) cos Delta cos(2 omega0 t + 2 phi) and the quadrature
    oscillation -(V I / 2) sin Delta sin(2 omega0 t + 2 phi). The first two
    terms form the active, the last term the non-active power.

    Returns
    -------
    average : numpy.ndarray
    in_phase : numpy.ndarray
    quadrature : numpy.ndarray
        The terms on the sample times of the grid.
    """
    delta = theta - phi
    scale = V * I / 2
    rotation = 2 * omega0 * grid.times + 2 * phi
    average = np.full(grid.n_samples, scale * np.cos(delta))
    in_phase = scale * np.cos(delta) * np.cos(rotation)
    quadrature = -scale * np.sin(delta) * np.sin(rotation)
    return average, in_phase, quadrature
