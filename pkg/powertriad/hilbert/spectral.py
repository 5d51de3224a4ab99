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

# External modules
import numpy as np
import scipy.fft

# Internal modules
from powertriad.signals.waveform import RealWaveform, AnalyticWaveform
from powertriad.spectral.spectrum import Spectrum


logger = logging.getLogger(__name__)


def _hilbert_multiplier(n_samples):
    """
    The discrete frequency response -j sgn(omega) on the non-negative bins,
    zero at DC and at the Nyquist bin.
    """
    multiplier = np.full(n_samples // 2 + 1, -1j)
    multiplier[0] = 0
    if n_samples % 2 == 0:
        multiplier[-1] = 0
    return multiplier


def hilbert_spectral(x):
    """
    The discrete Hilbert transform of a real waveform, computed in the
    frequency domain. The record is interpreted as one period of a periodic
    signal; for non-periodic records the transform is not exact and the
    caller should either window the record or use
    :py:func:`~powertriad.hilbert.fir.hilbert_fir`.

    Parameters
    ----------
    x : RealWaveform
        The real waveform x(t).

    Returns
    -------
    x_hat : RealWaveform
        The Hilbert transform with the same grid and unit as x. DC and
        Nyquist components are mapped to zero.

    Examples
    --------
    >>> grid = SamplingGrid.for_periods(2*np.pi, 4, samples_per_period=64)
    >>> x = gen_sinusoid(SinusoidSpec(1, 0.3, 2*np.pi), grid)
    >>> np.allclose(hilbert_spectral(x).samples, np.sin(2*np.pi*grid.times+0.3))
    True
    """
    if not isinstance(x, RealWaveform):
        raise TypeError('The spectral Hilbert transform needs a '
                        'RealWaveform!')
    n_samples = x.grid.n_samples
    spectrum = scipy.fft.rfft(x.samples)
    transformed = scipy.fft.irfft(spectrum * _hilbert_multiplier(n_samples),
                                  n=n_samples)
    return x.with_samples(transformed, attrs=x.attrs)


def phase_split(x):
    """
    The phase splitter, x~(t) = x(t) + j H{x}(t). The real part of the
    returned analytic signal is identical to the samples of x.

    Parameters
    ----------
    x : RealWaveform
        The real waveform.

    Returns
    -------
    x_tilde : AnalyticWaveform
        The analytic signal of x.
    """
    x_hat = hilbert_spectral(x)
    samples = np.empty(x.grid.n_samples, dtype=complex)
    samples.real = x.samples
    samples.imag = x_hat.samples
    return AnalyticWaveform(x.grid, samples, source_unit=x.unit,
                            attrs=x.attrs)


def spectral_representations(x):
    """
    The one-sided spectra of a real waveform, of its Hilbert transform and of
    its analytic signal.

    Parameters
    ----------
    x : RealWaveform
        The real waveform.

    Returns
    -------
    x_spectrum : Spectrum
        The real spectrum X(omega) of x.
    x_hat_spectrum : Spectrum
        The real spectrum -j sgn(omega) X(omega) of the Hilbert transform.
    x_tilde_spectrum : Spectrum
        The analytic spectrum 2 X(omega) step(omega).
    """
    x_spectrum = Spectrum.from_waveform(x)
    hat_values = x_spectrum.values * _hilbert_multiplier(x.grid.n_samples)
    x_hat_spectrum = Spectrum(x.grid, hat_values, kind='real', unit=x.unit)
    x_tilde_spectrum = Spectrum(x.grid, x_spectrum.analytic_values,
                                kind='analytic', unit=x.unit)
    return x_spectrum, x_hat_spectrum, x_tilde_spectrum
