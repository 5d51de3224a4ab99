#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 08.03.24
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
import pandas as pd
import scipy.signal

# Internal modules
from powertriad.signals.waveform import RealWaveform, AnalyticWaveform


logger = logging.getLogger(__name__)


available_windows = {
    'rectangular': 'boxcar',
    'hamming': 'hamming',
    'blackman': 'blackman',
}


class HilbertFirDesign(object):
    """
    A windowed ideal Hilbert transformer of type III (odd length,
    anti-symmetric coefficients). The ideal impulse response 2 / (pi n) for
    odd n and 0 for even n, relative to the center tap, is multiplied with a
    symmetric window.

    Parameters
    ----------
    n_taps : int, optional
        The odd number of taps, at least three. Default is 255.
    window : str, optional
        One of rectangular, hamming or blackman. Default is hamming.
    """
    def __init__(self, n_taps=255, window='hamming'):
        self._n_taps = None
        self._window = None
        self._coefficients = None
        self.n_taps = n_taps
        self.window = window

    def __repr__(self):
        return 'HilbertFirDesign(n_taps={0:d}, window={1:s})'.format(
            self.n_taps, self.window)

    def __eq__(self, other):
        try:
            return self.n_taps == other.n_taps and self.window == other.window
        except AttributeError:
            return False

    def __hash__(self):
        return hash((self.n_taps, self.window))

    @property
    def n_taps(self):
        return self._n_taps

    @n_taps.setter
    def n_taps(self, n_taps):
        if self._n_taps is not None:
            raise AttributeError('A FIR design is immutable!')
        if not isinstance(n_taps, numbers.Integral) or n_taps < 3:
            raise ValueError('The number of taps needs to be an integer >= 3, '
                             'got {0}!'.format(n_taps))
        if n_taps % 2 == 0:
            raise ValueError('A type III Hilbert transformer needs an odd '
                             'number of taps, got {0:d}!'.format(n_taps))
        self._n_taps = int(n_taps)

    @property
    def window(self):
        return self._window

    @window.setter
    def window(self, window):
        if self._window is not None:
            raise AttributeError('A FIR design is immutable!')
        if window not in available_windows:
            raise ValueError('The given window "{0}" is not available, please '
                             'use one of {1}!'.format(
                                 window, ', '.join(available_windows.keys())))
        self._window = window

    @property
    def delay(self):
        """
        The group delay (n_taps - 1) / 2 in samples.
        """
        return (self.n_taps - 1) // 2

    @property
    def coefficients(self):
        """
        The filter coefficients as read-only numpy array.
        """
        if self._coefficients is None:
            n = np.arange(self.n_taps) - self.delay
            ideal = np.zeros(self.n_taps)
            odd = n % 2 != 0
            ideal[odd] = 2. / (np.pi * n[odd])
            window = scipy.signal.get_window(available_windows[self.window],
                                             self.n_taps, fftbins=False)
            window = (window + window[::-1]) / 2
            coefficients = ideal * window
            coefficients.flags.writeable = False
            self._coefficients = coefficients
        return self._coefficients

    @property
    def dc_leakage(self):
        """
        The absolute DC gain of the filter. For an anti-symmetric design this
        is zero up to rounding.
        """
        return abs(np.sum(self.coefficients))

    def frequency_response(self, omega, sample_rate):
        """
        The delay-compensated frequency response of the filter. The ideal
        response is -j sgn(omega).

        Parameters
        ----------
        omega : array_like
            The radian frequencies in rad/s.
        sample_rate : float
            The sampling rate in samples/s.

        Returns
        -------
        response : numpy.ndarray
            The complex response at the given frequencies.
        """
        omega = np.atleast_1d(np.asarray(omega, dtype=float))
        n = np.arange(self.n_taps) - self.delay
        kernel = np.exp(-1j * np.outer(omega / sample_rate, n))
        return kernel.dot(self.coefficients)

    def response_deviation(self, omega, sample_rate):
        """
        The deviation |j H(omega) - 1| of the frequency response from the
        ideal -j at a positive frequency.
        """
        response = self.frequency_response(omega, sample_rate)
        deviation = np.abs(1j * response - 1)
        if deviation.size == 1:
            return float(deviation[0])
        return deviation

    def power_error_bound(self, omega0, sample_rate):
        """
        The relative error bound of the power of sinusoids at the carrier.

        With the response deviation e at the carrier, an analytic signal
        deviates by at most e times its magnitude outside the transient,
        so the product of two analytic signals deviates by at most
        2 e + e**2 times its magnitude. S, P and Q then deviate by at most
        this bound times the apparent power S.

        Parameters
        ----------
        omega0 : float
            The carrier in rad/s.
        sample_rate : float
            The sampling rate in samples/s.

        Returns
        -------
        bound : float
            The relative bound.
        """
        deviation = self.response_deviation(omega0, sample_rate)
        return 2 * deviation + deviation ** 2

    def to_dataframe(self):
        return pd.DataFrame({'tap': np.arange(self.n_taps) - self.delay,
                             'coefficient': self.coefficients})

    def to_csv(self, path):
        """
        Export the coefficients as csv file with the columns tap and
        coefficient, where tap is the index relative to the center tap.
        """
        self.to_dataframe().to_csv(path, index=False, float_format='%.17g')


def hilbert_fir(x, design):
    """
    Approximate the Hilbert transform with a FIR filter. The convolution is
    compensated by the group delay of the filter, such that the output is
    aligned with the input. The (n_taps - 1) / 2 samples at both edges are
    affected by the filter transient and are flagged in the ``transient``
    attribute of the returned waveform.

    Parameters
    ----------
    x : RealWaveform
        The real input waveform.
    design : HilbertFirDesign
        The FIR design.

    Returns
    -------
    x_hat : RealWaveform
        The approximated Hilbert transform. The attributes hold the
        transient extent and the DC leakage of the design.
    """
    if not isinstance(x, RealWaveform):
        raise TypeError('The FIR Hilbert transform needs a RealWaveform!')
    if not isinstance(design, HilbertFirDesign):
        raise TypeError('The design needs to be a HilbertFirDesign!')
    transformed = scipy.signal.convolve(x.samples, design.coefficients,
                                        mode='same')
    edge = min(design.delay, x.grid.n_samples)
    logger.debug('FIR Hilbert transform with {0}, transient of {1:d} '
                 'samples'.format(design, edge))
    attrs = dict(x.attrs)
    attrs['transient'] = (edge, edge)
    attrs['dc_leakage'] = design.dc_leakage
    return x.with_samples(transformed, attrs=attrs)


def phase_split_fir(x, design):
    """
    Phase splitter with the FIR Hilbert transformer, x + j hilbert_fir(x).
    """
    x_hat = hilbert_fir(x, design)
    return AnalyticWaveform(x.grid, x.samples + 1j * x_hat.samples,
                            source_unit=x.unit, attrs=x_hat.attrs)
