#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 13.03.24
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
"""
Thevenin circuits with a time-varying impedance Z(t, omega), the Fourier
transform of a real time-varying impulse response z(t, tau). For a
sinusoidal current only the response at the carrier, Z(t, omega0), is
needed. The power formulas rely on Bedrosian's theorem and therefore need an
impedance whose variation is slower than the carrier.
"""

# System modules
import logging

# External modules
import numpy as np
import pandas as pd

# Internal modules
from powertriad.exceptions import DataError, NumericValidityError
from powertriad.hilbert.bedrosian import BedrosianReport
from powertriad.power.series import PowerSeries
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.io import grid_from_times, parse_numeric_frame
from powertriad.signals.waveform import RealWaveform
from powertriad.utilities.numerics import envelope_bandwidth


logger = logging.getLogger(__name__)


CONSISTENCY_ATOL = 1e-6
MIN_TAU_PER_PERIOD = 8


class TimeVaryingImpedance(object):
    """
    A tabulated time-varying impedance.

    Parameters
    ----------
    grid : SamplingGrid
        The time grid of the tabulation.
    response_at_carrier : array_like or None, optional
        The complex response Z(t_k, omega0) at the carrier for every sample.
    carrier : float or None, optional
        The carrier omega0 of response_at_carrier in rad/s.
    impulse_response : array_like or None, optional
        The real impulse response z(t_k, tau_m) with the shape
        (n_samples, n_tau). The lag axis tau_m = m / sample_rate uses the
        sampling rate of the grid.
    declared_bandwidth : float or None, optional
        The declared bandwidth of the variation of Z(t, omega0) in rad/s. If
        this is None, the bandwidth is measured from the tabulation.

    At least one of response_at_carrier and impulse_response has to be
    given. If both are given, they have to be consistent.
    """
    def __init__(self, grid, response_at_carrier=None, carrier=None,
                 impulse_response=None, declared_bandwidth=None):
        if not isinstance(grid, SamplingGrid):
            raise TypeError('The grid needs to be a SamplingGrid!')
        if response_at_carrier is None and impulse_response is None:
            raise ValueError('Either the response at the carrier or the '
                             'impulse response has to be given!')
        self._grid = grid
        self._response = None
        self._impulse = None
        if response_at_carrier is not None:
            if carrier is None or carrier <= 0:
                raise ValueError('The response at the carrier needs a '
                                 'positive carrier!')
            response = np.array(response_at_carrier, dtype=complex)
            if response.shape != (grid.n_samples, ):
                raise DataError('The response at the carrier needs {0:d} '
                                'values, got {1}!'.format(grid.n_samples,
                                                          response.shape))
            if not np.all(np.isfinite(response)):
                raise DataError('The response at the carrier is not finite!')
            response.flags.writeable = False
            self._response = response
        if impulse_response is not None:
            impulse = np.array(impulse_response, dtype=float)
            if impulse.ndim != 2 or impulse.shape[0] != grid.n_samples:
                raise DataError('The impulse response needs the shape '
                                '({0:d}, n_tau), got {1}!'.format(
                                    grid.n_samples, impulse.shape))
            if not np.all(np.isfinite(impulse)):
                raise DataError('The impulse response is not finite!')
            impulse.flags.writeable = False
            self._impulse = impulse
        self.carrier = None if carrier is None else float(carrier)
        if declared_bandwidth is not None and declared_bandwidth < 0:
            raise ValueError('The declared bandwidth needs to be '
                             'non-negative!')
        self.declared_bandwidth = declared_bandwidth
        if self._response is not None and self._impulse is not None:
            self.check_consistency(self.carrier)

    def __repr__(self):
        forms = []
        if self._response is not None:
            forms.append('carrier={0:.6g}'.format(self.carrier))
        if self._impulse is not None:
            forms.append('n_tau={0:d}'.format(self.n_tau))
        return 'TimeVaryingImpedance({0}, {1:s})'.format(self._grid,
                                                         ', '.join(forms))

    @property
    def grid(self):
        return self._grid

    @property
    def response_at_carrier(self):
        return self._response

    @property
    def impulse_response(self):
        return self._impulse

    @property
    def n_tau(self):
        if self._impulse is None:
            return 0
        return self._impulse.shape[1]

    @property
    def tau(self):
        """
        The lags of the impulse response in seconds.
        """
        return np.arange(self.n_tau) / self._grid.sample_rate

    def check_tau_resolution(self, omega0):
        """
        Reject a lag grid coarser than an eighth of the carrier period.

        Raises
        ------
        NumericValidityError
            The lag spacing is too coarse for the carrier.
        """
        period = 2 * np.pi / omega0
        if self._grid.dt > period / MIN_TAU_PER_PERIOD:
            raise NumericValidityError(
                'The lag spacing of {0:.6g} s is coarser than 1/{1:d} of the '
                'carrier period ({2:.6g} s)!'.format(
                    self._grid.dt, MIN_TAU_PER_PERIOD, period))

    def transform_impulse(self, omega0):
        """
        The response sum_m z(t, tau_m) exp(-j omega0 tau_m) dtau of the
        impulse response at the given frequency.
        """
        if self._impulse is None:
            raise ValueError('There is no impulse response to transform!')
        self.check_tau_resolution(omega0)
        kernel = np.exp(-1j * omega0 * self.tau) * self._grid.dt
        return self._impulse.dot(kernel)

    def carrier_response(self, omega0):
        """
        The response Z(t_k, omega0) at the given carrier. The tabulated
        response is used if it belongs to this carrier, otherwise the impulse
        response is transformed.
        """
        if self._response is not None and np.isclose(omega0, self.carrier,
                                                      rtol=1e-12, atol=0):
            return self._response
        if self._impulse is None:
            raise ValueError('The response is only tabulated for the carrier '
                             '{0:.6g} rad/s!'.format(self.carrier))
        return self.transform_impulse(omega0)

    def check_consistency(self, omega0, atol=CONSISTENCY_ATOL):
        """
        Compare the tabulated response at the carrier with the transformed
        impulse response.

        Returns
        -------
        deviation : float
            The maximum absolute deviation.

        Raises
        ------
        DataError
            The deviation exceeds atol.
        """
        if self._response is None or self._impulse is None:
            raise ValueError('Both forms are needed to check the '
                             'consistency!')
        deviation = float(np.max(np.abs(self._response -
                                        self.transform_impulse(omega0))))
        if deviation > atol:
            raise DataError('The response at the carrier and the impulse '
                            'response differ by {0:.3e}!'.format(deviation))
        logger.debug('Impedance forms agree within {0:.3e}'.format(deviation))
        return deviation

    def bandwidth_report(self, omega0):
        """
        Check the bandwidth of the variation of Z(t, omega0) against the
        carrier.
        """
        if self.declared_bandwidth is not None:
            return BedrosianReport(self.declared_bandwidth, omega0,
                                   declared=True)
        bandwidth = envelope_bandwidth(self.carrier_response(omega0),
                                       self._grid.sample_rate)
        return BedrosianReport(bandwidth, omega0)

    @classmethod
    def from_csv(cls, path, carrier, declared_bandwidth=None):
        """
        Read the response at the carrier from a csv file with the header
        ``t,re_Z,im_Z``.
        """
        frame = pd.read_csv(path, dtype=str, skipinitialspace=True)
        if list(frame.columns) != ['t', 're_Z', 'im_Z']:
            raise DataError('The impedance file {0} needs the header '
                            '"t,re_Z,im_Z"!'.format(path))
        frame = parse_numeric_frame(frame)
        grid = grid_from_times(frame['t'].values)
        response = frame['re_Z'].values + 1j * frame['im_Z'].values
        return cls(grid, response_at_carrier=response, carrier=carrier,
                   declared_bandwidth=declared_bandwidth)

    def to_csv(self, path, omega0=None):
        omega0 = self.carrier if omega0 is None else omega0
        response = self.carrier_response(omega0)
        frame = pd.DataFrame({'t': self._grid.times, 're_Z': response.real,
                              'im_Z': response.imag},
                             columns=['t', 're_Z', 'im_Z'])
        frame.to_csv(path, index=False, float_format='%.17g')


def _check_grid(impedance, grid):
    if grid is None:
        return impedance.grid
    impedance.grid.check_aligned(grid)
    return grid


def _sinusoid_response(impedance, spec, grid):
    """
    Response of the impedance to a sinusoid, computed from the carrier
    response and, if available, by the direct lag summation.
    """
    omega0 = spec.omega0
    grid.check_nyquist(omega0)
    times = grid.times
    response = impedance.carrier_response(omega0)
    carrier_path = np.real(response * spec.phasor * np.exp(1j * omega0 *
                                                            times))
    convolution_path = None
    if impedance.impulse_response is not None:
        impedance.check_tau_resolution(omega0)
        delayed = spec.evaluate(times[:, None] - impedance.tau[None, :])
        convolution_path = np.sum(impedance.impulse_response * delayed,
                                  axis=1) * grid.dt
    return carrier_path, convolution_path


def _report_bandwidth(impedance, omega0):
    report = impedance.bandwidth_report(omega0)
    if not report.valid:
        logger.warning('The impedance varies with a bandwidth of {0:.6g} '
                       'rad/s, which is not smaller than the carrier '
                       '{1:.6g} rad/s. Bedrosian based results are not '
                       'valid!'.format(report.envelope_bandwidth, omega0))
    return report


def _response_waveforms(impedance, spec, grid, response_unit, drive_unit):
    grid = _check_grid(impedance, grid)
    carrier_path, convolution_path = _sinusoid_response(impedance, spec, grid)
    report = _report_bandwidth(impedance, spec.omega0)
    attrs = {'bedrosian_valid': bool(report.valid),
             'bandwidth_ratio': report.ratio}
    response = RealWaveform(grid, carrier_path, unit=response_unit,
                            attrs=attrs)
    drive = RealWaveform(grid, spec.evaluate(grid.times), unit=drive_unit)
    convolved = None
    if convolution_path is not None:
        convolved = RealWaveform(grid, convolution_path, unit=response_unit,
                                 attrs=attrs)
    return response, drive, convolved


def voltage_from_current_tv(impedance, i_spec, grid=None):
    """
    Drive a time-varying impedance with a sinusoidal current,

        v(t) = int z(t, tau) i(t - tau) dtau = Re{Z(t, omega0) I e^{j phi}
        e^{j omega0 t}}.

    Parameters
    ----------
    impedance : TimeVaryingImpedance
        The impedance.
    i_spec : SinusoidSpec
        The current.
    grid : SamplingGrid or None, optional
        The grid, needs to be the grid of the impedance. Default is the grid
        of the impedance.

    Returns
    -------
    v : RealWaveform
        The voltage computed from the carrier response.
    i : RealWaveform
        The current.
    v_convolution : RealWaveform or None
        The voltage computed by the rectangular lag summation of the impulse
        response, None if no impulse response is tabulated.

    Raises
    ------
    NumericValidityError
        The lag grid is coarser than an eighth of the carrier period.
    """
    return _response_waveforms(impedance, i_spec, grid, 'volt', 'ampere')


def current_from_voltage_tv(admittance, v_spec, grid=None):
    """
    Drive a time-varying admittance with a regulated sinusoidal voltage. This
    is the dual of :py:func:`voltage_from_current_tv` with the roles of
    voltage and current swapped.

    Returns
    -------
    i : RealWaveform
    v : RealWaveform
    i_convolution : RealWaveform or None
    """
    return _response_waveforms(admittance, v_spec, grid, 'ampere', 'volt')


def power_from_impedance_tv(impedance, I, phi, omega0):
    """
    The power series of a time-varying impedance driven by the current
    I cos(omega0 t + phi). With Bedrosian's theorem the Hermitian power is
    Z(t, omega0) I^2 and the complementary power
    Z(t, omega0) I^2 exp(j(2 omega0 t + 2 phi)); the active power
    R(t) I^2 / 2 (1 + cos(2 omega0 t + 2 phi)) follows the resistance and the
    non-active power -X(t) I^2 / 2 sin(2 omega0 t + 2 phi) the reactance.

    Returns
    -------
    series : PowerSeries
        The power series. If the bandwidth of the impedance is not smaller
        than the carrier, a warning is logged and the Bedrosian report is
        stored in the attributes of the series.
    """
    grid = impedance.grid
    grid.check_nyquist(omega0)
    report = _report_bandwidth(impedance, omega0)
    response = impedance.carrier_response(omega0)
    rotation = 2 * omega0 * grid.times + 2 * phi
    hermitian = response * I ** 2
    complementary = hermitian * np.exp(1j * rotation)
    active = response.real * I ** 2 / 2 * (1 + np.cos(rotation))
    nonactive = -response.imag * I ** 2 / 2 * np.sin(rotation)
    attrs = {'bedrosian': report.to_dict()}
    if not report.valid:
        attrs['warnings'] = ['bandwidth of the impedance violates the '
                             'Bedrosian condition']
    return PowerSeries(grid, hermitian, complementary, active, nonactive,
                       attrs=attrs)
