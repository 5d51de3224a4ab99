#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 06.03.24
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
import scipy.signal

# Internal modules
from powertriad.exceptions import NumericValidityError
from .waveform import AnalyticWaveform, RealWaveform, Envelope


logger = logging.getLogger(__name__)


def complex_demodulate(x, omega0):
    """
    Demodulate an analytic signal with exp(-j omega0 t). For a modulated
    carrier, whose complex envelope has a bandwidth smaller than omega0, this
    returns the complex envelope A(t) exp(j theta(t)).

    Parameters
    ----------
    x : AnalyticWaveform
        The analytic signal.
    omega0 : float
        The carrier in rad/s.

    Returns
    -------
    envelope : Envelope
        The demodulated complex envelope.
    """
    if not isinstance(x, AnalyticWaveform):
        raise TypeError('The complex demodulator needs an analytic signal!')
    carrier = np.exp(-1j * omega0 * x.grid.times)
    return Envelope(x.grid, x.samples * carrier, omega0)


def default_lowpass_taps(sample_rate, omega0, periods=8):
    """
    Odd number of lowpass taps spanning the given number of carrier periods.
    """
    half = int(np.ceil(periods / 2 * sample_rate * 2 * np.pi / omega0))
    return 2 * half + 1


def design_lowpass(n_taps, cutoff, sample_rate, window='blackman'):
    """
    Design a linear-phase lowpass FIR filter with the window method.

    Parameters
    ----------
    n_taps : int
        The odd number of taps.
    cutoff : float
        The cut-off in rad/s.
    sample_rate : float
        The sampling rate in samples/s.
    window : str, optional
        The window passed to scipy.signal.firwin. Default is blackman.

    Returns
    -------
    taps : numpy.ndarray
        The filter coefficients with unit DC gain.
    """
    if n_taps % 2 != 1 or n_taps < 3:
        raise ValueError('The lowpass needs an odd number of at least three '
                         'taps, got {0}!'.format(n_taps))
    return scipy.signal.firwin(n_taps, cutoff / (2 * np.pi), window=window,
                               fs=sample_rate)


def quadrature_demodulate(x, omega0, lowpass_cutoff, n_taps=None,
                          window='blackman'):
    """
    Approximate the phase splitter and complex demodulator by a quadrature
    demodulator. The real signal is multiplied with 2 cos(omega0 t) in the
    in-phase channel and with 2 sin(omega0 t) in the quadrature channel; both
    channels are lowpass filtered with a linear-phase FIR. The envelope is
    returned as I - jQ, which matches the complex demodulator up to filter
    transients.

    Parameters
    ----------
    x : RealWaveform
        The real modulated carrier.
    omega0 : float
        The carrier in rad/s.
    lowpass_cutoff : float
        The cut-off of the lowpass in rad/s. Needs to be smaller than omega0.
    n_taps : int or None, optional
        The odd number of lowpass taps. If this is None, the filter spans
        eight carrier periods.
    window : str, optional
        The window of the lowpass design. Default is blackman.

    Returns
    -------
    envelope : Envelope
        The complex envelope. The (n_taps-1)/2 samples at both edges are
        reported as transient.

    Raises
    ------
    NumericValidityError
        The cut-off is not smaller than the carrier or the carrier violates
        the Nyquist criterion.
    """
    if not isinstance(x, RealWaveform):
        raise TypeError('The quadrature demodulator needs a real waveform!')
    if lowpass_cutoff >= omega0:
        raise NumericValidityError(
            'The lowpass cut-off ({0:.6g} rad/s) needs to be smaller than the '
            'carrier ({1:.6g} rad/s)!'.format(lowpass_cutoff, omega0))
    if lowpass_cutoff <= 0:
        raise ValueError('The lowpass cut-off needs to be positive!')
    x.grid.check_nyquist(omega0)
    sample_rate = x.grid.sample_rate
    if n_taps is None:
        n_taps = default_lowpass_taps(sample_rate, omega0)
    n_taps = min(n_taps, x.grid.n_samples - (1 - x.grid.n_samples % 2))
    taps = design_lowpass(n_taps, lowpass_cutoff, sample_rate, window)
    logger.debug('Quadrature demodulator with {0:d} taps and cut-off '
                 '{1:.6g} rad/s'.format(n_taps, lowpass_cutoff))

    phase = omega0 * x.grid.times
    in_phase = scipy.signal.fftconvolve(2 * x.samples * np.cos(phase), taps,
                                        mode='same')
    quadrature = scipy.signal.fftconvolve(2 * x.samples * np.sin(phase), taps,
                                          mode='same')
    half = (n_taps - 1) // 2
    return Envelope(x.grid, in_phase - 1j * quadrature, omega0,
                    transient=(half, half))


def instantaneous_frequency(x):
    """
    The instantaneous frequency d/dt arg x~(t) of an analytic signal in rad/s,
    estimated with central differences of the unwrapped phase.

    Parameters
    ----------
    x : AnalyticWaveform
        The analytic signal.

    Returns
    -------
    omega : numpy.ndarray
        The instantaneous radian frequency at every sample.
    """
    if not isinstance(x, AnalyticWaveform):
        raise TypeError('The instantaneous frequency needs an analytic '
                        'signal!')
    if x.grid.n_samples < 2:
        raise ValueError('At least two samples are needed!')
    return np.gradient(x.phase, x.grid.dt)
