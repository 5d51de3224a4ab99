#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 14.03.24
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
Carrier frequency estimation and recovery of the current phase from the
Hermitian and the complementary power.
"""

# System modules
import logging

# External modules
import numpy as np
import scipy.fft
import scipy.optimize
import scipy.signal

# Internal modules
from powertriad.exceptions import EstimationError, NumericValidityError
from powertriad.signals.waveform import RealWaveform
from powertriad.utilities.numerics import wrap_angle
from .config import MIN_ESTIMATION_PERIODS


logger = logging.getLogger(__name__)


PEAK_TO_MEDIAN = 10.
BRANCH_MARGIN = np.pi / 8


def _spectral_peak(samples, sample_rate):
    """
    Coarse estimate of the dominant tone from the Hann windowed spectrum,
    interpolated with a parabola through the logarithmic magnitudes of the
    peak bin and its neighbours.
    """
    n_samples = samples.size
    window = scipy.signal.get_window('hann', n_samples)
    magnitude = np.abs(scipy.fft.rfft((samples - samples.mean()) * window))
    magnitude = magnitude[1:]
    if magnitude.size < 3:
        raise EstimationError('The block is too short to estimate the '
                              'carrier!')
    peak = int(np.argmax(magnitude))
    median = np.median(magnitude)
    if magnitude[peak] == 0:
        ratio = 0.
    elif median == 0:
        ratio = np.inf
    else:
        ratio = magnitude[peak] / median
    if ratio < PEAK_TO_MEDIAN:
        raise EstimationError('There is no dominant spectral peak, the '
                              'peak-to-median ratio is {0:.3g}!'.format(ratio))
    offset = 0.
    if 0 < peak < magnitude.size - 1:
        left, center, right = np.log(np.maximum(
            magnitude[peak - 1:peak + 2], np.finfo(float).tiny))
        curvature = left - 2 * center + right
        if curvature < 0:
            offset = 0.5 * (left - right) / curvature
    bin_width = 2 * np.pi * sample_rate / n_samples
    return (peak + 1 + offset) * bin_width, bin_width


def _fit_energy(omega, times, samples, weights):
    basis = np.column_stack((np.ones_like(times), np.cos(omega * times),
                             np.sin(omega * times))) * weights[:, None]
    target = samples * weights
    coeffs = np.linalg.lstsq(basis, target, rcond=None)[0]
    return np.sum(basis.dot(coeffs) ** 2)


def estimate_omega0(block):
    """
    Estimate the carrier of the dominant tone within a block.

    The interpolated peak of the Hann windowed spectrum is refined by a
    bounded search within one frequency bin, which maximizes the energy of a
    Hann weighted least-squares fit of an offset sinusoid. The fit includes
    the negative frequency image, such that the estimate is unbiased for
    clean tones.

    Parameters
    ----------
    block : RealWaveform
        The block, which should cover at least four periods of the dominant
        tone.

    Returns
    -------
    omega0 : float
        The estimated carrier in rad/s.

    Raises
    ------
    EstimationError
        There is no dominant peak (peak-to-median ratio below 10) or the
        block covers less than four periods of the estimated tone.
    """
    if not isinstance(block, RealWaveform):
        raise TypeError('The frequency estimator needs a RealWaveform!')
    grid = block.grid
    samples = np.asarray(block.samples, dtype=float)
    coarse, bin_width = _spectral_peak(samples, grid.sample_rate)
    times = np.arange(grid.n_samples) / grid.sample_rate
    weights = np.sqrt(scipy.signal.get_window('hann', grid.n_samples,
                                              fftbins=False))
    lower = max(coarse - bin_width, 0.5 * bin_width)
    upper = min(coarse + bin_width, np.pi * grid.sample_rate)
    result = scipy.optimize.minimize_scalar(
        lambda omega: -_fit_energy(omega, times, samples, weights),
        bounds=(lower, upper), method='bounded',
        options={'xatol': 1e-7 * bin_width})
    omega0 = float(result.x)
    periods = grid.duration * omega0 / (2 * np.pi)
    if periods < MIN_ESTIMATION_PERIODS:
        raise EstimationError(
            'The block covers only {0:.2f} periods of the estimated carrier '
            '{1:.6g} rad/s, at least {2:d} are needed!'.format(
                periods, omega0, MIN_ESTIMATION_PERIODS))
    logger.debug('Estimated carrier {0:.9g} rad/s (coarse {1:.9g})'.format(
        omega0, coarse))
    return omega0


def demodulate_complementary(complementary, omega0, t):
    """
    Shift the complementary power to baseband, exp(-j 2 omega0 t) p_C. For
    sinusoids this is the constant V I exp(j(theta + phi)).
    """
    return np.exp(-2j * omega0 * np.asarray(t)) * complementary


class PhaseEstimate(object):
    """
    The recovered current phase. The identity only determines 2 phi, the
    estimate phi lies on the principal branch (-pi/2, pi/2] and alternate is
    the other solution phi +- pi.

    Attributes
    ----------
    phi : float
        The principal estimate in radians.
    alternate : float
        The other half-angle solution in (-pi, pi].
    ambiguous : bool
        If the branch is questionable: either the reference phase is closer
        to the alternate solution or, without a reference, the estimate lies
        within the margin of the branch boundary.
    """
    def __init__(self, phi, alternate, ambiguous):
        self.phi = float(phi)
        self.alternate = float(alternate)
        self.ambiguous = bool(ambiguous)

    def __repr__(self):
        return 'PhaseEstimate(phi={0:.9g}, alternate={1:.9g}, ' \
               'ambiguous={2})'.format(self.phi, self.alternate,
                                       self.ambiguous)


def recover_phi(hermitian, complementary, omega0, t, reference=None,
                margin=BRANCH_MARGIN):
    """
    Recover the phase phi of the current from the Hermitian and the
    complementary power with the identity

        exp(-j 2 omega0 t) p_C = exp(j 2 phi) p_H*,

    such that phi = 1/2 arg(exp(-j 2 omega0 t) p_C conj(p_H)). For series
    the products are averaged before the angle is taken.

    Parameters
    ----------
    hermitian : complex or array_like
        The Hermitian power.
    complementary : complex or array_like
        The complementary power at the times t.
    omega0 : float
        The carrier in rad/s.
    t : float or array_like
        The absolute sample times in seconds.
    reference : float or None, optional
        A reference phase, e.g. the phase of the demodulated current. It is
        only used to flag a branch flip.
    margin : float, optional
        Without reference, estimates closer than this margin to the branch
        boundary +-pi/2 are flagged. Default is pi/8.

    Returns
    -------
    estimate : PhaseEstimate

    Raises
    ------
    NumericValidityError
        The Hermitian power vanishes.
    """
    hermitian = np.asarray(hermitian, dtype=complex)
    if np.mean(np.abs(hermitian)) == 0:
        raise NumericValidityError('The current phase is undefined for a '
                                   'vanishing Hermitian power!')
    product = demodulate_complementary(complementary, omega0, t) * \
        np.conj(hermitian)
    phi = 0.5 * wrap_angle(float(np.angle(np.mean(product))))
    alternate = phi - np.pi if phi > 0 else phi + np.pi
    if reference is None:
        ambiguous = abs(phi) > np.pi / 2 - margin
    else:
        ambiguous = abs(wrap_angle(reference - phi)) > np.pi / 2
    return PhaseEstimate(phi, alternate, ambiguous)
