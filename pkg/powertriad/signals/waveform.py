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

# System modules
import logging
from copy import deepcopy

# External modules
import numpy as np
import xarray as xr

# Internal modules
from powertriad.exceptions import DataError
from .grid import SamplingGrid


logger = logging.getLogger(__name__)


available_units = ('volt', 'ampere', 'watt', 'dimensionless')


def _frozen_array(values, dtype):
    array = np.array(values, dtype=dtype, copy=True)
    if array.ndim != 1:
        raise DataError('The samples need to be a one-dimensional array, got '
                        '{0:d} dimensions!'.format(array.ndim))
    array.flags.writeable = False
    return array


def check_unit(unit):
    if unit not in available_units:
        raise ValueError('The given unit "{0}" is not available, please use '
                         'one of {1}!'.format(unit, ', '.join(available_units)))
    return unit


class BaseWaveform(object):
    """
    Base class for uniformly sampled time series. The samples are immutable
    after construction.
    """
    _dtype = np.float64

    def __init__(self, grid, samples, attrs=None):
        if not isinstance(grid, SamplingGrid):
            raise TypeError('The grid needs to be a SamplingGrid!')
        samples = _frozen_array(samples, self._dtype)
        if samples.size != grid.n_samples:
            raise DataError(
                'The number of samples ({0:d}) does not match the grid '
                '({1:d})!'.format(samples.size, grid.n_samples))
        if not np.all(np.isfinite(samples)):
            raise DataError('All samples of a {0:s} need to be '
                            'finite!'.format(self.__class__.__name__))
        self._grid = grid
        self._samples = samples
        self._attrs = dict(attrs) if attrs else {}

    def __len__(self):
        return self._grid.n_samples

    def __str__(self):
        return '{0:s}({1:s}, n_samples={2:d})'.format(
            self.__class__.__name__, str(self._grid.sample_rate),
            self._grid.n_samples)

    __repr__ = __str__

    def copy(self):
        return deepcopy(self)

    @property
    def grid(self):
        return self._grid

    @property
    def samples(self):
        return self._samples

    @property
    def times(self):
        return self._grid.times

    @property
    def attrs(self):
        """
        Additional metadata, e.g. the transient region of a filtered
        waveform as (n_leading, n_trailing) samples under 'transient'.
        """
        return self._attrs

    @property
    def valid_slice(self):
        """
        The slice of samples outside of a flagged transient region.
        """
        lead, trail = self._attrs.get('transient', (0, 0))
        return slice(lead, self._grid.n_samples - trail)

    def check_aligned(self, other):
        self._grid.check_aligned(other.grid)


class RealWaveform(BaseWaveform):
    """
    A uniformly sampled real time series, e.g. a voltage v(t), a current
    i(t) or an instantaneous power p(t).

    Parameters
    ----------
    grid : SamplingGrid
        The sampling grid of the samples.
    samples : array_like
        The real samples. All samples need to be finite.
    unit : str, optional
        One of volt, ampere, watt or dimensionless. Default is
        dimensionless.
    attrs : dict or None, optional
        Additional metadata.
    """
    def __init__(self, grid, samples, unit='dimensionless', attrs=None):
        if np.iscomplexobj(samples):
            raise DataError('The samples of a RealWaveform need to be real!')
        super().__init__(grid, samples, attrs)
        self._unit = check_unit(unit)

    @property
    def unit(self):
        return self._unit

    def with_samples(self, samples, unit=None, attrs=None):
        """
        Create a new waveform on the same grid with other samples.
        """
        return RealWaveform(self.grid, samples,
                            unit=self.unit if unit is None else unit,
                            attrs=attrs)

    def to_dataarray(self, name=None):
        """
        Convert this waveform into a xarray.DataArray with the sample times as
        time coordinate. The sampling metadata is stored as attributes.

        Returns
        -------
        data_array : xarray.DataArray
            The waveform as DataArray.
        """
        attrs = dict(unit=self.unit, sample_rate=self.grid.sample_rate,
                     t0=self.grid.t0)
        attrs.update({k: v for k, v in self.attrs.items()
                      if not isinstance(v, (tuple, list))})
        return xr.DataArray(np.array(self.samples), coords={'time': self.times},
                            dims=('time',), name=name, attrs=attrs)


class AnalyticWaveform(BaseWaveform):
    """
    A complex analytic signal x~(t) = x(t) + j x^(t), the generalization of a
    rotating phasor.

    Parameters
    ----------
    grid : SamplingGrid
        The sampling grid.
    samples : array_like
        The complex samples.
    source_unit : str, optional
        The unit of the real waveform this analytic signal originates from.
    attrs : dict or None, optional
        Additional metadata.
    """
    _dtype = np.complex128

    def __init__(self, grid, samples, source_unit='dimensionless', attrs=None):
        super().__init__(grid, samples, attrs)
        self._source_unit = check_unit(source_unit)

    @property
    def source_unit(self):
        return self._source_unit

    @property
    def real(self):
        """
        The real part as RealWaveform. For the output of the phase splitter
        this returns the original samples bit for bit.
        """
        return RealWaveform(self.grid, self.samples.real,
                            unit=self.source_unit, attrs=self.attrs)

    @property
    def imag(self):
        return RealWaveform(self.grid, self.samples.imag,
                            unit=self.source_unit, attrs=self.attrs)

    @property
    def envelope(self):
        """
        The instantaneous amplitude |x~(t)|.
        """
        return np.abs(self.samples)

    @property
    def phase(self):
        """
        The unwrapped instantaneous phase arg x~(t) in radians.
        """
        return np.unwrap(np.angle(self.samples))

    def rotated(self, alpha):
        """
        Multiply the samples with the common phase factor exp(j alpha).
        """
        return AnalyticWaveform(self.grid, self.samples * np.exp(1j * alpha),
                                source_unit=self.source_unit, attrs=self.attrs)


class Envelope(BaseWaveform):
    """
    A complex baseband (complex envelope) series A(t) exp(j theta(t)) as
    returned by the demodulators.

    Parameters
    ----------
    grid : SamplingGrid
        The sampling grid.
    samples : array_like
        The complex envelope samples.
    omega0 : float
        The carrier used for the demodulation in rad/s.
    transient : tuple(int, int), optional
        The number of leading and trailing samples which are affected by
        filter transients. Default is (0, 0).
    """
    _dtype = np.complex128

    def __init__(self, grid, samples, omega0, transient=(0, 0)):
        super().__init__(grid, samples, attrs={'transient': tuple(transient)})
        self._omega0 = float(omega0)

    @property
    def omega0(self):
        return self._omega0

    @property
    def transient(self):
        return self.attrs['transient']

    @property
    def amplitude(self):
        return np.abs(self.samples)

    @property
    def phase(self):
        return np.unwrap(np.angle(self.samples))
