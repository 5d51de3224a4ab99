#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 18.03.24
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
import xarray as xr

# Internal modules
from powertriad.hilbert.fir import HilbertFirDesign, hilbert_fir
from powertriad.hilbert.spectral import hilbert_spectral, phase_split
from powertriad.power.series import power_series
from powertriad.power.summary import power_summary
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.io import grid_from_times
from powertriad.signals.waveform import RealWaveform
from .base import AccessorBase


logger = logging.getLogger(__name__)


available_hilbert_methods = ('spectral', 'fir')


@xr.register_dataarray_accessor('pt')
class WaveformAccessor(AccessorBase):
    """
    The WaveformAccessor extends a one-dimensional xarray.DataArray with a
    time dimension by the waveform operations of powertriad. A DataArray
    created with :py:meth:`RealWaveform.to_dataarray` carries its sampling
    metadata as attributes, otherwise the grid is derived from the time
    coordinate.
    """
    def __init__(self, data):
        super().__init__(data)
        self._grid = None

    def __str__(self):
        name = "{0:s}({1})".format(self.__class__.__name__, self.data.name)
        return "{0:s}\n{1:s}\nGrid: {2:s}".format(name, '-'*len(name),
                                                  str(self.grid))

    @property
    def grid(self):
        """
        The sampling grid of this DataArray.
        """
        if self._grid is None:
            self._grid = self._build_grid()
        return self._grid

    def _build_grid(self):
        if self.data.ndim != 1:
            raise TypeError('The waveform accessor needs a one-dimensional '
                            'DataArray, got the dimensions {0}!'.format(
                                self.data.dims))
        attrs = self.data.attrs
        if 'sample_rate' in attrs:
            return SamplingGrid(attrs['sample_rate'], self.data.size,
                                attrs.get('t0', 0.))
        if 'time' not in self.data.coords:
            raise TypeError('The DataArray needs either a sample_rate '
                            'attribute or a time coordinate!')
        return grid_from_times(np.asarray(self.data['time'].values,
                                          dtype=float))

    @property
    def waveform(self):
        """
        The DataArray as RealWaveform.
        """
        return RealWaveform(self.grid, np.asarray(self.data.values),
                            unit=self.data.attrs.get('unit', 'dimensionless'))

    def _like(self, samples, name_suffix):
        name = None if self.data.name is None else '{0}_{1:s}'.format(
            self.data.name, name_suffix)
        return xr.DataArray(samples, coords=self.data.coords,
                            dims=self.data.dims, name=name,
                            attrs=dict(self.data.attrs))

    def hilbert(self, method='spectral', design=None):
        """
        The Hilbert transform of this waveform.

        Parameters
        ----------
        method : str, optional
            Either ``spectral`` (exact for a periodic record) or ``fir``.
            Default is spectral.
        design : HilbertFirDesign or None, optional
            The FIR design for the fir method. Default is a 255-tap Hamming
            design.

        Returns
        -------
        transformed : xarray.DataArray
            The transformed waveform. The fir transient is stored in the
            ``transient_lead`` and ``transient_trail`` attributes.
        """
        if method not in available_hilbert_methods:
            raise ValueError('The Hilbert method "{0}" is not available, '
                             'please use one of {1}!'.format(
                                 method, ', '.join(available_hilbert_methods)))
        if method == 'spectral':
            return self._like(hilbert_spectral(self.waveform).samples,
                              'hilbert')
        design = HilbertFirDesign() if design is None else design
        transformed = hilbert_fir(self.waveform, design)
        result = self._like(transformed.samples, 'hilbert')
        lead, trail = transformed.attrs['transient']
        result.attrs.update(transient_lead=lead, transient_trail=trail)
        return result

    def phase_split(self):
        """
        The analytic signal x + j H{x} as complex DataArray.
        """
        return self._like(phase_split(self.waveform).samples, 'analytic')

    def power_summary(self, current):
        """
        Summarize the power of this voltage together with a current.

        Parameters
        ----------
        current : xarray.DataArray
            The current on the same time grid.

        Returns
        -------
        summary : PowerSummary
        """
        v_tilde = phase_split(self.waveform)
        i_tilde = phase_split(current.pt.waveform)
        return power_summary(power_series(v_tilde, i_tilde))
