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
import pandas as pd

# Internal modules
from powertriad.exceptions import DataError
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.waveform import RealWaveform, AnalyticWaveform
from .decomposition import active_nonactive_split, positive_negative_split


logger = logging.getLogger(__name__)


series_columns = ['t', 'p', 'p_active', 'p_nonactive', 'p_pos', 'p_neg',
                  're_pH', 'im_pH', 're_pC', 'im_pC']

voltage_units = ('volt', 'dimensionless')
current_units = ('ampere', 'dimensionless')


def _check_pair(v, i, waveform_type):
    if not isinstance(v, waveform_type) or not isinstance(i, waveform_type):
        raise TypeError('Voltage and current need to be given as '
                        '{0:s}!'.format(waveform_type.__name__))
    v_unit = getattr(v, 'unit', getattr(v, 'source_unit', None))
    i_unit = getattr(i, 'unit', getattr(i, 'source_unit', None))
    if v_unit not in voltage_units or i_unit not in current_units:
        raise ValueError('Expected a voltage and a current, got the units '
                         '{0} and {1}!'.format(v_unit, i_unit))
    v.check_aligned(i)


def _frozen(values, dtype):
    values = np.array(values, dtype=dtype, copy=True)
    values.flags.writeable = False
    return values


def instantaneous_power(v, i):
    """
    The instantaneous power p(t) = v(t) i(t).

    Parameters
    ----------
    v : RealWaveform
        The voltage.
    i : RealWaveform
        The current on the same grid.

    Returns
    -------
    p : RealWaveform
        The instantaneous power with unit watt.

    Raises
    ------
    DataError
        The grids are not aligned.
    """
    _check_pair(v, i, RealWaveform)
    return RealWaveform(v.grid, v.samples * i.samples, unit='watt')


def hermitian_power(v_tilde, i_tilde):
    """
    The complex Hermitian power v~(t) i~*(t). For sinusoids this is the
    constant V I exp(j(theta - phi)).

    Parameters
    ----------
    v_tilde : AnalyticWaveform
        The analytic voltage.
    i_tilde : AnalyticWaveform
        The analytic current on the same grid.

    Returns
    -------
    hermitian : numpy.ndarray
        The complex Hermitian power series.
    """
    _check_pair(v_tilde, i_tilde, AnalyticWaveform)
    return v_tilde.samples * np.conj(i_tilde.samples)


def complementary_power(v_tilde, i_tilde):
    """
    The complex complementary power v~(t) i~(t). For sinusoids this is a
    phasor with magnitude V I rotating at twice the carrier.
    """
    _check_pair(v_tilde, i_tilde, AnalyticWaveform)
    return v_tilde.samples * i_tilde.samples


def reconstruct_instantaneous(hermitian, complementary):
    """
    Reconstruct the instantaneous power 1/2 Re{p_H + p_C} from the Hermitian
    and the complementary power.

    Raises
    ------
    DataError
        The series have a different length.
    """
    hermitian = np.asarray(hermitian)
    complementary = np.asarray(complementary)
    if hermitian.shape != complementary.shape:
        raise DataError('The Hermitian ({0}) and the complementary ({1}) power '
                        'are not aligned!'.format(hermitian.shape,
                                                  complementary.shape))
    return 0.5 * (hermitian.real + complementary.real)


class PowerSeries(object):
    """
    The time series of the power components of a voltage-current pair. The
    arrays are read-only.

    Parameters
    ----------
    grid : SamplingGrid
        The sampling grid.
    hermitian : array_like
        The complex Hermitian power v~ i~*.
    complementary : array_like
        The complex complementary power v~ i~.
    active : array_like
        The active power.
    nonactive : array_like
        The non-active power.
    degenerate : array_like or None, optional
        Boolean mask of the samples with a zero Hermitian power, where the
        split into active and non-active power is undefined.
    attrs : dict or None, optional
        Additional metadata, e.g. the transient region or warnings.
    """
    def __init__(self, grid, hermitian, complementary, active, nonactive,
                 degenerate=None, attrs=None):
        if not isinstance(grid, SamplingGrid):
            raise TypeError('The grid needs to be a SamplingGrid!')
        arrays = dict(hermitian=_frozen(hermitian, complex),
                      complementary=_frozen(complementary, complex),
                      active=_frozen(active, float),
                      nonactive=_frozen(nonactive, float))
        for name, values in arrays.items():
            if values.shape != (grid.n_samples, ):
                raise DataError('The {0:s} power needs {1:d} samples, got '
                                '{2}!'.format(name, grid.n_samples,
                                              values.shape))
        if degenerate is None:
            degenerate = np.zeros(grid.n_samples, dtype=bool)
        self._grid = grid
        self._hermitian = arrays['hermitian']
        self._complementary = arrays['complementary']
        self._active = arrays['active']
        self._nonactive = arrays['nonactive']
        self._degenerate = _frozen(degenerate, bool)
        self._instantaneous = _frozen(
            reconstruct_instantaneous(self._hermitian, self._complementary),
            float)
        positive, negative = positive_negative_split(self._instantaneous)
        self._positive = _frozen(positive, float)
        self._negative = _frozen(negative, float)
        self.attrs = dict(attrs) if attrs else {}

    def __len__(self):
        return self._grid.n_samples

    def __repr__(self):
        return 'PowerSeries({0})'.format(self._grid)

    @property
    def grid(self):
        return self._grid

    @property
    def times(self):
        return self._grid.times

    @property
    def hermitian(self):
        return self._hermitian

    @property
    def complementary(self):
        return self._complementary

    @property
    def instantaneous(self):
        return self._instantaneous

    @property
    def active(self):
        return self._active

    @property
    def nonactive(self):
        return self._nonactive

    @property
    def positive(self):
        return self._positive

    @property
    def negative(self):
        return self._negative

    @property
    def degenerate(self):
        return self._degenerate

    @property
    def valid_slice(self):
        lead, trail = self.attrs.get('transient', (0, 0))
        return slice(lead, self._grid.n_samples - trail)

    def subseries(self, start, stop):
        """
        The power series of the samples start:stop.
        """
        grid = self._grid.subgrid(start, stop)
        return PowerSeries(grid, self._hermitian[start:stop],
                           self._complementary[start:stop],
                           self._active[start:stop],
                           self._nonactive[start:stop],
                           self._degenerate[start:stop])

    def to_dataframe(self):
        """
        Convert the series into a pandas.DataFrame with the columns
        t, p, p_active, p_nonactive, p_pos, p_neg, re_pH, im_pH, re_pC and
        im_pC.
        """
        return pd.DataFrame({
            't': self.times,
            'p': self.instantaneous,
            'p_active': self.active,
            'p_nonactive': self.nonactive,
            'p_pos': self.positive,
            'p_neg': self.negative,
            're_pH': self.hermitian.real,
            'im_pH': self.hermitian.imag,
            're_pC': self.complementary.real,
            'im_pC': self.complementary.imag,
        }, columns=series_columns)

    def to_csv(self, path):
        self.to_dataframe().to_csv(path, index=False, float_format='%.17g')


def power_series(v_tilde, i_tilde):
    """
    Assemble the full power series of an analytic voltage-current pair.

    Parameters
    ----------
    v_tilde : AnalyticWaveform
        The analytic voltage.
    i_tilde : AnalyticWaveform
        The analytic current.

    Returns
    -------
    series : PowerSeries
        The Hermitian, complementary, instantaneous, active, non-active,
        positive and negative power. A transient region of the inputs is
        carried over.
    """
    hermitian = hermitian_power(v_tilde, i_tilde)
    complementary = complementary_power(v_tilde, i_tilde)
    active, nonactive, degenerate = active_nonactive_split(hermitian,
                                                           complementary)
    lead = max(v_tilde.attrs.get('transient', (0, 0))[0],
               i_tilde.attrs.get('transient', (0, 0))[0])
    trail = max(v_tilde.attrs.get('transient', (0, 0))[1],
                i_tilde.attrs.get('transient', (0, 0))[1])
    attrs = {}
    if lead or trail:
        attrs['transient'] = (lead, trail)
    return PowerSeries(v_tilde.grid, hermitian, complementary, active,
                       nonactive, degenerate, attrs=attrs)
