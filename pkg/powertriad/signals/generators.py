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

# External modules
import numpy as np

# Internal modules
from powertriad.exceptions import DataError
from powertriad.utilities.numerics import envelope_bandwidth
from .waveform import RealWaveform


logger = logging.getLogger(__name__)


def _check_amplitude(amplitude):
    if not isinstance(amplitude, numbers.Real) or not np.isfinite(amplitude) \
            or amplitude < 0:
        raise ValueError('The amplitude needs to be a non-negative finite '
                         'number, got {0}!'.format(amplitude))
    return float(amplitude)


def _check_omega0(omega0):
    if not isinstance(omega0, numbers.Real) or not np.isfinite(omega0) or \
            omega0 <= 0:
        raise ValueError('The carrier omega0 needs to be a positive finite '
                         'number, got {0}!'.format(omega0))
    return float(omega0)


class SinusoidSpec(object):
    """
    Specification of the sinusoid amplitude * cos(omega0 * t + phase).

    Parameters
    ----------
    amplitude : float
        The amplitude V or I. Needs to be non-negative.
    phase : float
        The phase theta or phi in radians.
    omega0 : float
        The radian frequency in rad/s. Needs to be positive.
    """
    def __init__(self, amplitude, phase, omega0):
        self.amplitude = _check_amplitude(amplitude)
        self.phase = float(phase)
        self.omega0 = _check_omega0(omega0)

    def __repr__(self):
        return 'SinusoidSpec(amplitude={0}, phase={1}, omega0={2})'.format(
            self.amplitude, self.phase, self.omega0)

    @property
    def phasor(self):
        """
        The stationary phasor amplitude * exp(j phase).
        """
        return self.amplitude * np.exp(1j * self.phase)

    def evaluate(self, t):
        return self.amplitude * np.cos(self.omega0 * np.asarray(t) +
                                       self.phase)


class HarmonicSpec(object):
    """
    Specification of the periodic signal sum_m A_m cos(m omega0 t + theta_m).
    The symmetry A_{-m} = A_m and theta_{-m} = -theta_m of the two-sided
    representation holds by construction.

    Parameters
    ----------
    omega0 : float
        The fundamental radian frequency in rad/s.
    terms : iterable(tuple(int, float, float))
        The harmonic terms as (m, A_m, theta_m) with harmonic index m >= 1
        and amplitude A_m >= 0. The indices need to be distinct.
    """
    def __init__(self, omega0, terms=()):
        self.omega0 = _check_omega0(omega0)
        self._terms = None
        self.terms = terms

    def __repr__(self):
        return 'HarmonicSpec(omega0={0}, terms={1})'.format(self.omega0,
                                                            self.terms)

    @property
    def terms(self):
        return self._terms

    @terms.setter
    def terms(self, terms):
        checked = []
        for term in terms:
            m, amplitude, theta = term
            if not isinstance(m, numbers.Integral) or m < 1:
                raise ValueError('The harmonic index needs to be an integer '
                                 '>= 1, got {0}!'.format(m))
            checked.append((int(m), _check_amplitude(amplitude), float(theta)))
        indices = [t[0] for t in checked]
        if len(set(indices)) != len(indices):
            raise ValueError('The harmonic indices need to be distinct!')
        self._terms = tuple(sorted(checked))

    @property
    def max_harmonic(self):
        if not self._terms:
            return 0
        return self._terms[-1][0]

    @property
    def amplitude_sum(self):
        return sum(t[1] for t in self._terms)

    def evaluate(self, t):
        t = np.asarray(t, dtype=float)
        values = np.zeros_like(t)
        for m, amplitude, theta in self._terms:
            values = values + amplitude * np.cos(m * self.omega0 * t + theta)
        return values

    def evaluate_hilbert(self, t):
        """
        The Hilbert transform sum_m A_m sin(m omega0 t + theta_m).
        """
        t = np.asarray(t, dtype=float)
        values = np.zeros_like(t)
        for m, amplitude, theta in self._terms:
            values = values + amplitude * np.sin(m * self.omega0 * t + theta)
        return values

    def line_coefficients(self):
        """
        The two-sided line spectrum (A_m / 2) exp(j theta_m) indexed by the
        harmonic number. The entry with index zero is the (zero) DC value.

        Returns
        -------
        coefficients : numpy.ndarray
            Complex coefficients of length max_harmonic + 1.
        """
        coefficients = np.zeros(self.max_harmonic + 1, dtype=complex)
        for m, amplitude, theta in self._terms:
            coefficients[m] = amplitude / 2 * np.exp(1j * theta)
        return coefficients


class ModulatedSpec(object):
    """
    Specification of the amplitude and phase modulated carrier
    A(t) cos(omega0 t + theta(t)).

    Parameters
    ----------
    omega0 : float
        The carrier in rad/s.
    envelope : float, callable or array_like
        The non-negative lowpass amplitude A(t). A callable is evaluated at
        the sample times, an array needs to be tabulated on the grid.
    phase_mod : float, callable or array_like, optional
        The lowpass phase theta(t) in radians. Default is 0.
    envelope_bandwidth : float or None, optional
        The declared bandwidth of A(t) exp(j theta(t)) in rad/s. This is
        checked against the carrier, it is not assumed to be valid.
    """
    def __init__(self, omega0, envelope, phase_mod=0., envelope_bandwidth=None):
        self.omega0 = _check_omega0(omega0)
        self.envelope = envelope
        self.phase_mod = phase_mod
        if envelope_bandwidth is not None and envelope_bandwidth < 0:
            raise ValueError('The envelope bandwidth needs to be '
                             'non-negative!')
        self.envelope_bandwidth = envelope_bandwidth

    @property
    def bedrosian_valid(self):
        """
        If the declared bandwidth is smaller than the carrier. None if no
        bandwidth was declared.
        """
        if self.envelope_bandwidth is None:
            return None
        return self.envelope_bandwidth < self.omega0

    @staticmethod
    def _tabulate(value, times, name):
        if callable(value):
            values = np.asarray(value(times), dtype=float)
        else:
            values = np.asarray(value, dtype=float)
        if values.ndim == 0:
            values = np.full(times.shape, float(values))
        if values.shape != times.shape:
            raise DataError('The {0:s} needs to be tabulated on the grid, got '
                            '{1} values for {2} samples!'.format(
                                name, values.shape, times.shape))
        if not np.all(np.isfinite(values)):
            raise DataError('The {0:s} contains non-finite values!'.format(
                name))
        return values

    def tabulate(self, grid):
        """
        Tabulate the envelope A(t) and the phase theta(t) on the grid.

        Returns
        -------
        envelope : numpy.ndarray
            The envelope A(t_k).
        phase : numpy.ndarray
            The phase modulation theta(t_k).
        """
        times = grid.times
        envelope = self._tabulate(self.envelope, times, 'envelope')
        phase = self._tabulate(self.phase_mod, times, 'phase modulation')
        if np.any(envelope < 0):
            raise DataError('The envelope needs to be non-negative!')
        return envelope, phase

    def complex_envelope(self, grid):
        """
        The complex envelope A(t) exp(j theta(t)) on the grid.
        """
        envelope, phase = self.tabulate(grid)
        return envelope * np.exp(1j * phase)


def gen_sinusoid(spec, grid, unit='dimensionless'):
    """
    Generate the sinusoid amplitude * cos(omega0 * t_k + phase).

    Parameters
    ----------
    spec : SinusoidSpec
        The sinusoid specification.
    grid : SamplingGrid
        The sampling grid. The grid needs to be Nyquist-valid for omega0.
    unit : str, optional
        The unit of the waveform. Default is dimensionless.

    Returns
    -------
    waveform : RealWaveform
        The generated waveform.

    Raises
    ------
    NumericValidityError
        The sample rate is not greater than twice the frequency.
    """
    grid.check_nyquist(spec.omega0)
    return RealWaveform(grid, spec.evaluate(grid.times), unit=unit)


def gen_harmonic(spec, grid, unit='dimensionless'):
    """
    Generate the periodic signal sum_m A_m cos(m omega0 t_k + theta_m). An
    empty term list generates a zero waveform.

    Raises
    ------
    NumericValidityError
        The highest harmonic violates the Nyquist criterion.
    """
    grid.check_nyquist(spec.max_harmonic * spec.omega0)
    return RealWaveform(grid, spec.evaluate(grid.times), unit=unit)


def gen_modulated(spec, grid, unit='dimensionless'):
    """
    Generate the modulated carrier A(t_k) cos(omega0 t_k + theta(t_k)).

    The upper sideband omega0 + Omega has to be Nyquist-valid, where Omega is
    the declared envelope bandwidth or, without declaration, the bandwidth
    measured from the tabulated complex envelope.

    Raises
    ------
    DataError
        The envelope or the phase modulation contain non-finite values or are
        not tabulated on the grid.
    NumericValidityError
        The carrier or its upper sideband violate the Nyquist criterion.
    """
    grid.check_nyquist(spec.omega0)
    envelope, phase = spec.tabulate(grid)
    bandwidth = spec.envelope_bandwidth
    if bandwidth is None:
        bandwidth = envelope_bandwidth(envelope * np.exp(1j * phase),
                                       grid.sample_rate)
    grid.check_nyquist(spec.omega0 + bandwidth)
    samples = envelope * np.cos(spec.omega0 * grid.times + phase)
    return RealWaveform(grid, samples, unit=unit)
