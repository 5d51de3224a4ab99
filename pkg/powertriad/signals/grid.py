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
import numbers
from copy import deepcopy

# External modules
import numpy as np

# Internal modules
from powertriad.exceptions import DataError, NumericValidityError


logger = logging.getLogger(__name__)


class SamplingGrid(object):
    """
    A uniform sampling grid. The time of sample k is t0 + k / sample_rate.

    Parameters
    ----------
    sample_rate : float
        The sampling rate in samples per second. Needs to be positive.
    n_samples : int
        The number of samples. Needs to be positive.
    t0 : float, optional
        The time of the first sample in seconds. Default is 0.
    """
    def __init__(self, sample_rate, n_samples, t0=0.):
        self._sample_rate = None
        self._n_samples = None
        self._t0 = None
        self.sample_rate = sample_rate
        self.n_samples = n_samples
        self.t0 = t0

    def __str__(self):
        name = self.__class__.__name__
        return '{0:s}(sample_rate={1}, n_samples={2:d}, t0={3})'.format(
            name, self.sample_rate, self.n_samples, self.t0)

    __repr__ = __str__

    def __eq__(self, other):
        try:
            return (self.sample_rate == other.sample_rate and
                    self.n_samples == other.n_samples and
                    self.t0 == other.t0)
        except AttributeError:
            return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.sample_rate, self.n_samples, self.t0))

    def copy(self):
        return deepcopy(self)

    @property
    def sample_rate(self):
        return self._sample_rate

    @sample_rate.setter
    def sample_rate(self, rate):
        if self._sample_rate is not None:
            raise AttributeError('The sampling grid is immutable!')
        if not isinstance(rate, numbers.Real) or not np.isfinite(rate) or \
                rate <= 0:
            raise ValueError('The sample rate needs to be a positive finite '
                             'number, got {0}!'.format(rate))
        self._sample_rate = float(rate)

    @property
    def n_samples(self):
        return self._n_samples

    @n_samples.setter
    def n_samples(self, n):
        if self._n_samples is not None:
            raise AttributeError('The sampling grid is immutable!')
        if not isinstance(n, numbers.Integral) or n <= 0:
            raise ValueError('The number of samples needs to be a positive '
                             'integer, got {0}!'.format(n))
        self._n_samples = int(n)

    @property
    def t0(self):
        return self._t0

    @t0.setter
    def t0(self, t0):
        if self._t0 is not None:
            raise AttributeError('The sampling grid is immutable!')
        if not isinstance(t0, numbers.Real) or not np.isfinite(t0):
            raise ValueError('The start time needs to be a finite number!')
        self._t0 = float(t0)

    @property
    def dt(self):
        return 1. / self.sample_rate

    @property
    def duration(self):
        """
        The duration of the record, n_samples / sample_rate, in seconds.
        """
        return self.n_samples / self.sample_rate

    @property
    def times(self):
        """
        The sample times t_k = t0 + k / sample_rate as numpy array.
        """
        return self.t0 + np.arange(self.n_samples) / self.sample_rate

    @property
    def nyquist(self):
        """
        The Nyquist frequency in rad/s.
        """
        return np.pi * self.sample_rate

    @property
    def omega(self):
        """
        The non-negative discrete frequencies of a one-sided spectrum on this
        grid in rad/s.
        """
        return 2 * np.pi * np.fft.rfftfreq(self.n_samples, d=self.dt)

    def check_nyquist(self, omega):
        """
        Check if the given radian frequency could be generated on this grid.
        The sample rate has to be strictly greater than twice the frequency.

        Parameters
        ----------
        omega : float
            The highest radian frequency in rad/s.

        Raises
        ------
        NumericValidityError
            The Nyquist criterion is violated.
        """
        if abs(omega) >= self.nyquist:
            raise NumericValidityError(
                'The frequency {0:.6g} rad/s violates the Nyquist criterion '
                'of the grid with {1:.6g} samples/s!'.format(
                    omega, self.sample_rate))

    def periods(self, omega0):
        """
        The number of carrier periods covered by this grid.
        """
        return self.duration * omega0 / (2 * np.pi)

    def is_integer_period(self, omega0, rtol=1e-9):
        periods = self.periods(omega0)
        return abs(periods - round(periods)) <= rtol * max(periods, 1.)

    def check_aligned(self, other):
        """
        Raise a DataError if the other grid is not equal to this grid.
        """
        if self != other:
            raise DataError('The sampling grids are not aligned: {0:s} != '
                            '{1:s}'.format(str(self), str(other)))

    def subgrid(self, start, stop):
        """
        Get the grid of the samples start:stop.
        """
        if not 0 <= start < stop <= self.n_samples:
            raise ValueError('The slice {0:d}:{1:d} is not within the '
                             'grid!'.format(start, stop))
        return SamplingGrid(self.sample_rate, stop - start,
                            self.t0 + start / self.sample_rate)

    @classmethod
    def for_periods(cls, omega0, periods, samples_per_period=None,
                    sample_rate=None, t0=0.):
        """
        Build a grid which covers a given number of carrier periods. Integer
        periods per record are the default for test grids, such that the
        spectral Hilbert transform is exact.

        Parameters
        ----------
        omega0 : float
            The carrier in rad/s.
        periods : float
            The number of carrier periods.
        samples_per_period : int or None, optional
            The number of samples per carrier period. Either this or
            sample_rate has to be given.
        sample_rate : float or None, optional
            The sampling rate. The number of samples is rounded to the next
            integer.
        t0 : float, optional
            The start time. Default is 0.

        Returns
        -------
        grid : SamplingGrid
            The constructed grid.
        """
        if omega0 <= 0:
            raise ValueError('The carrier needs to be positive!')
        period = 2 * np.pi / omega0
        if samples_per_period is not None:
            sample_rate = samples_per_period / period
            n_samples = int(round(samples_per_period * periods))
        elif sample_rate is not None:
            n_samples = int(round(periods * period * sample_rate))
        else:
            raise ValueError('Either samples_per_period or sample_rate has to '
                             'be given!')
        return cls(sample_rate, n_samples, t0)
