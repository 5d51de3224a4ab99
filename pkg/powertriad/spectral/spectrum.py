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
from powertriad.exceptions import DataError
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.waveform import RealWaveform, AnalyticWaveform, \
    check_unit


logger = logging.getLogger(__name__)


available_kinds = ('real', 'analytic')


class Spectrum(object):
    """
    A one-sided discrete spectrum on the frequency bins of a sampling grid.

    The values are the two-sided Fourier coefficients c_k = DFT(x)_k / N of
    the non-negative bins k = 0, ..., N // 2, with the phase referenced to the
    first sample time t0. A real signal is then given by

        x(t_n) = sum_k w_k Re{c_k exp(j omega_k (t_n - t0))}

    with the one-sided weight w_k = 2 for the interior bins and w_k = 1 for
    the DC and the Nyquist bin. The analytic signal has the coefficients
    w_k c_k, the discrete version of 2 X(omega) step(omega).

    Parameters
    ----------
    grid : SamplingGrid
        The sampling grid the spectrum belongs to.
    values : array_like
        The complex coefficients of the N // 2 + 1 non-negative bins.
    kind : str, optional
        Either real, the spectrum of a real signal, or analytic, the
        one-sided spectrum of an analytic signal. Default is real.
    unit : str, optional
        The unit of the originating waveform. Default is dimensionless.
    """
    def __init__(self, grid, values, kind='real', unit='dimensionless'):
        if not isinstance(grid, SamplingGrid):
            raise TypeError('The grid needs to be a SamplingGrid!')
        if kind not in available_kinds:
            raise ValueError('The given spectrum kind "{0}" is not available, '
                             'please use one of {1}!'.format(
                                 kind, ', '.join(available_kinds)))
        values = np.array(values, dtype=complex, copy=True)
        n_bins = grid.n_samples // 2 + 1
        if values.shape != (n_bins,):
            raise DataError('The spectrum needs {0:d} bins for the grid, got '
                            '{1}!'.format(n_bins, values.shape))
        values.flags.writeable = False
        self._grid = grid
        self._values = values
        self._kind = kind
        self._unit = check_unit(unit)

    def __str__(self):
        return 'Spectrum(kind={0:s}, n_bins={1:d})'.format(self.kind,
                                                           self.n_bins)

    __repr__ = __str__

    @classmethod
    def from_waveform(cls, x):
        """
        The spectrum of a real waveform.

        Parameters
        ----------
        x : RealWaveform
            The waveform, interpreted as one period of a periodic signal.

        Returns
        -------
        spectrum : Spectrum
            The real spectrum of the waveform.
        """
        if not isinstance(x, RealWaveform):
            raise TypeError('The spectrum needs a RealWaveform!')
        values = scipy.fft.rfft(x.samples) / x.grid.n_samples
        return cls(x.grid, values, kind='real', unit=x.unit)

    @property
    def grid(self):
        return self._grid

    @property
    def values(self):
        return self._values

    @property
    def kind(self):
        return self._kind

    @property
    def unit(self):
        return self._unit

    @property
    def n_bins(self):
        return self._values.size

    @property
    def omega(self):
        """
        The non-negative bin frequencies in rad/s.
        """
        return self._grid.omega

    @property
    def magnitude(self):
        """
        The magnitude A(omega) of the coefficients.
        """
        return np.abs(self._values)

    @property
    def phase(self):
        """
        The phase Theta(omega) of the coefficients in radians.
        """
        return np.angle(self._values)

    @property
    def self_conjugate(self):
        """
        Boolean mask of the bins which are their own mirror image, the DC bin
        and for an even number of samples the Nyquist bin.
        """
        mask = np.zeros(self.n_bins, dtype=bool)
        mask[0] = True
        if self._grid.n_samples % 2 == 0:
            mask[-1] = True
        return mask

    @property
    def weights(self):
        """
        The one-sided weights, 1 for self-conjugate bins and 2 otherwise.
        """
        return np.where(self.self_conjugate, 1., 2.)

    @property
    def analytic_values(self):
        """
        The coefficients of the analytic signal, w_k c_k.
        """
        if self.kind == 'analytic':
            return self._values
        return self.weights * self._values

    def support(self, rtol=1e-10):
        """
        The indices of the bins whose magnitude exceeds rtol times the
        largest magnitude. A zero spectrum has an empty support.
        """
        magnitude = self.magnitude
        peak = np.max(magnitude)
        if peak == 0:
            return np.array([], dtype=int)
        return np.flatnonzero(magnitude > rtol * peak)

    def check_aligned(self, other):
        self._grid.check_aligned(other.grid)
        if self.kind != other.kind:
            raise DataError('Cannot combine a {0:s} with an {1:s} '
                            'spectrum!'.format(self.kind, other.kind))

    def to_waveform(self):
        """
        Transform the spectrum back into the time domain.

        Returns
        -------
        waveform : RealWaveform or AnalyticWaveform
            A RealWaveform for a real spectrum and an AnalyticWaveform for an
            analytic spectrum.
        """
        n_samples = self._grid.n_samples
        if self.kind == 'real':
            samples = scipy.fft.irfft(self._values * n_samples, n=n_samples)
            return RealWaveform(self._grid, samples, unit=self.unit)
        two_sided = np.zeros(n_samples, dtype=complex)
        two_sided[:self.n_bins] = self._values
        samples = scipy.fft.ifft(two_sided) * n_samples
        return AnalyticWaveform(self._grid, samples, source_unit=self.unit)
