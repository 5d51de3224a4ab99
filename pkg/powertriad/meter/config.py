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

# System modules
import logging
import numbers

# External modules
import numpy as np

# Internal modules
from powertriad.hilbert.fir import HilbertFirDesign


logger = logging.getLogger(__name__)


available_hilbert_modes = ('spectral', 'fir')

MIN_ESTIMATION_PERIODS = 4


class MeterConfig(object):
    """
    The configuration of a power meter pipeline.

    Parameters
    ----------
    sample_rate : float
        The sampling rate of the incoming streams in samples per second.
    block_size : int
        The number of samples per block. Every block yields one record.
    omega0 : float or None, optional
        The known carrier in rad/s. If this is None, the carrier is estimated
        for every block and smoothed across blocks. Default is None.
    hilbert : str, optional
        The Hilbert transform of the blocks, either ``spectral`` (exact for
        blocks with an integer number of periods) or ``fir``. Default is
        spectral.
    fir_design : HilbertFirDesign or None, optional
        The FIR design for the fir mode. Default is a 255-tap Hamming design.
    smoothing : float, optional
        The exponential smoothing factor of the estimated carrier within
        (0, 1]. Default is 0.2.
    sinks : list(callable), optional
        Callables which are called with every emitted record.
    queue_size : int, optional
        The capacity of the bounded queue between the stream reader and the
        pipeline. Default is 8 blocks.
    t0 : float, optional
        The time of the first sample. Default is 0.
    keep_series : bool, optional
        If the per-sample power series should be attached to the records.
        Default is False.
    nominal_omega0 : float or None, optional
        The expected carrier in rad/s for the estimation mode, e.g. the
        nominal grid frequency. If given, a block has to cover at least four
        periods of it. Default is None.
    """
    def __init__(self, sample_rate, block_size, omega0=None, hilbert='spectral',
                 fir_design=None, smoothing=0.2, sinks=None, queue_size=8,
                 t0=0., keep_series=False, nominal_omega0=None):
        self._sample_rate = None
        self._block_size = None
        self._omega0 = None
        self._hilbert = None
        self._fir_design = None
        self._smoothing = None
        self._queue_size = None
        self._nominal_omega0 = None
        self.sample_rate = sample_rate
        self.hilbert = hilbert
        self.fir_design = fir_design
        self.block_size = block_size
        self.omega0 = omega0
        self.nominal_omega0 = nominal_omega0
        self.smoothing = smoothing
        self.queue_size = queue_size
        self.sinks = list(sinks) if sinks else []
        self.t0 = float(t0)
        self.keep_series = bool(keep_series)

    def __repr__(self):
        omega0 = 'estimated' if self.estimate else '{0:.6g}'.format(
            self.omega0)
        return 'MeterConfig(sample_rate={0}, block_size={1:d}, omega0={2:s}, ' \
               'hilbert={3:s})'.format(self.sample_rate, self.block_size,
                                       omega0, self.hilbert)

    @property
    def sample_rate(self):
        return self._sample_rate

    @sample_rate.setter
    def sample_rate(self, rate):
        if not isinstance(rate, numbers.Real) or not rate > 0 or \
                not np.isfinite(rate):
            raise ValueError('The sample rate needs to be a positive finite '
                             'number, got {0}!'.format(rate))
        self._sample_rate = float(rate)

    @property
    def hilbert(self):
        return self._hilbert

    @hilbert.setter
    def hilbert(self, mode):
        if mode not in available_hilbert_modes:
            raise ValueError('The Hilbert mode "{0}" is not available, please '
                             'use one of {1}!'.format(
                                 mode, ', '.join(available_hilbert_modes)))
        self._hilbert = mode

    @property
    def fir_design(self):
        return self._fir_design

    @fir_design.setter
    def fir_design(self, design):
        if design is None:
            design = HilbertFirDesign()
        if not isinstance(design, HilbertFirDesign):
            raise TypeError('The FIR design needs to be a HilbertFirDesign!')
        self._fir_design = design

    @property
    def block_size(self):
        return self._block_size

    @block_size.setter
    def block_size(self, size):
        if isinstance(size, float) and size.is_integer():
            size = int(size)
        if not isinstance(size, numbers.Integral) or size < 2:
            raise ValueError('The block size needs to be an integer of at '
                             'least 2, got {0}!'.format(size))
        if self.hilbert == 'fir' and size < self.fir_design.n_taps:
            raise ValueError('In the fir mode a block needs at least as many '
                             'samples as the filter taps ({0:d})!'.format(
                                 self.fir_design.n_taps))
        self._block_size = int(size)

    @property
    def omega0(self):
        return self._omega0

    @omega0.setter
    def omega0(self, omega0):
        if omega0 is not None:
            if not omega0 > 0 or not np.isfinite(omega0):
                raise ValueError('The carrier needs to be positive and '
                                 'finite, got {0}!'.format(omega0))
            omega0 = float(omega0)
            periods = self.block_duration * omega0 / (2 * np.pi)
            if self.hilbert == 'spectral' and \
                    abs(periods - round(periods)) > 1e-6 * periods:
                logger.warning(
                    'A block covers {0:.4f} carrier periods; the spectral '
                    'Hilbert transform is only exact for an integer number of '
                    'periods, consider the fir mode'.format(periods))
        self._omega0 = omega0

    @property
    def nominal_omega0(self):
        return self._nominal_omega0

    @nominal_omega0.setter
    def nominal_omega0(self, omega0):
        if omega0 is not None:
            if not omega0 > 0 or not np.isfinite(omega0):
                raise ValueError('The nominal carrier needs to be positive '
                                 'and finite, got {0}!'.format(omega0))
            omega0 = float(omega0)
            periods = self.block_duration * omega0 / (2 * np.pi)
            if self.estimate and periods < MIN_ESTIMATION_PERIODS:
                raise ValueError(
                    'A block covers {0:.4f} periods of the nominal carrier '
                    '{1:.6g} rad/s, the carrier estimation needs at least '
                    '{2:d} periods per block!'.format(
                        periods, omega0, MIN_ESTIMATION_PERIODS))
        self._nominal_omega0 = omega0

    @property
    def estimate(self):
        """
        If the carrier is estimated block by block.
        """
        return self._omega0 is None

    @property
    def smoothing(self):
        return self._smoothing

    @smoothing.setter
    def smoothing(self, alpha):
        if not 0 < alpha <= 1:
            raise ValueError('The smoothing factor needs to be within (0, 1], '
                             'got {0}!'.format(alpha))
        self._smoothing = float(alpha)

    @property
    def queue_size(self):
        return self._queue_size

    @queue_size.setter
    def queue_size(self, size):
        if int(size) != size or size < 1:
            raise ValueError('The queue size needs to be a positive integer!')
        self._queue_size = int(size)

    @property
    def block_duration(self):
        return self._block_size / self._sample_rate
