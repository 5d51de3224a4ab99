#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 10.03.24
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
Frequency-domain averages of the Hermitian, complementary and instantaneous
power. All averages are normalized such that they equal the time averages
over the record. The factor-four sums of the continuous one-sided integrals
are kept as raw diagnostics.
"""

# System modules
import logging

# External modules
import numpy as np
import pandas as pd

# Internal modules
from powertriad.exceptions import DataError
from .spectrum import Spectrum


logger = logging.getLogger(__name__)


TRIANGLE_RTOL = 1e-9

bin_columns = ['omega', 're_hermitian', 'im_hermitian', 're_complementary',
               'im_complementary', 'active', 'nonactive']


class SpectralAverages(object):
    """
    The averages of Hermitian, complementary and instantaneous power computed
    in the frequency domain.

    Parameters
    ----------
    hermitian : complex
        The average Hermitian power, the time average of v~ i~*.
    complementary : complex
        The average complementary power, the time average of v~ i~.
    raw_hermitian : complex
        The sum of 4 V(omega) I*(omega) over all bins.
    raw_complementary : complex
        The sum of 4 V(omega) I(omega) over all bins.
    bins : pandas.DataFrame or None, optional
        The per-bin contributions with the columns omega, re_hermitian,
        im_hermitian, re_complementary, im_complementary, active and
        nonactive.
    """
    def __init__(self, hermitian, complementary, raw_hermitian,
                 raw_complementary, bins=None):
        self.hermitian = complex(hermitian)
        self.complementary = complex(complementary)
        self.raw_hermitian = complex(raw_hermitian)
        self.raw_complementary = complex(raw_complementary)
        self.bins = bins

    def __iter__(self):
        return iter((self.hermitian, self.complementary, self.instantaneous))

    def __repr__(self):
        return 'SpectralAverages(hermitian={0}, complementary={1}, ' \
               'instantaneous={2})'.format(self.hermitian, self.complementary,
                                           self.instantaneous)

    @property
    def instantaneous(self):
        """
        The average instantaneous power P = 1/2 Re{P_H + P_C}.
        """
        return 0.5 * (self.hermitian + self.complementary).real

    @property
    def raw_instantaneous(self):
        return 0.5 * (self.raw_hermitian + self.raw_complementary).real

    def to_dict(self):
        return {
            're_hermitian': self.hermitian.real,
            'im_hermitian': self.hermitian.imag,
            're_complementary': self.complementary.real,
            'im_complementary': self.complementary.imag,
            'instantaneous': self.instantaneous,
            're_raw_hermitian': self.raw_hermitian.real,
            'im_raw_hermitian': self.raw_hermitian.imag,
            're_raw_complementary': self.raw_complementary.real,
            'im_raw_complementary': self.raw_complementary.imag,
            'raw_instantaneous': self.raw_instantaneous,
        }


class FrequencyPowerTriangle(object):
    """
    The power triangle of a single frequency bin. The hypotenuse is the
    apparent power, the legs are the active and the non-active power.
    """
    def __init__(self, omega, apparent, active, nonactive):
        if apparent < 0:
            raise ValueError('The apparent power needs to be non-negative!')
        self.omega = float(omega)
        self.apparent = float(apparent)
        self.active = float(active)
        self.nonactive = float(nonactive)

    def __repr__(self):
        return 'FrequencyPowerTriangle(omega={0:.6g}, apparent={1:.6g}, ' \
               'active={2:.6g}, nonactive={3:.6g})'.format(
                   self.omega, self.apparent, self.active, self.nonactive)


def _coefficient_averages(v_coeffs, i_coeffs, weights, self_conjugate, omega):
    """
    Evaluate the averages from two-sided coefficients of the non-negative
    bins. The analytic coefficients are the weighted coefficients; the time
    average of the complementary power only keeps the self-conjugate bins.
    """
    v_analytic = weights * v_coeffs
    i_analytic = weights * i_coeffs
    hermitian_bins = v_analytic * np.conj(i_analytic)
    complementary_bins = v_analytic * i_analytic
    triangle_bins = weights * v_coeffs * np.conj(i_coeffs)
    bins = pd.DataFrame({
        'omega': omega,
        're_hermitian': hermitian_bins.real,
        'im_hermitian': hermitian_bins.imag,
        're_complementary': complementary_bins.real,
        'im_complementary': complementary_bins.imag,
        'active': triangle_bins.real,
        'nonactive': triangle_bins.imag,
    }, columns=bin_columns)
    return SpectralAverages(
        hermitian=np.sum(hermitian_bins),
        complementary=np.sum(complementary_bins[self_conjugate]),
        raw_hermitian=np.sum(4 * v_coeffs * np.conj(i_coeffs)),
        raw_complementary=np.sum(4 * v_coeffs * i_coeffs),
        bins=bins
    )


def _check_spectra(v_spectrum, i_spectrum):
    if not isinstance(v_spectrum, Spectrum) or \
            not isinstance(i_spectrum, Spectrum):
        raise TypeError('The voltage and the current need to be given as '
                        'Spectrum!')
    if v_spectrum.kind != 'real' or i_spectrum.kind != 'real':
        raise DataError('The spectral averages need the spectra of real '
                        'signals!')
    v_spectrum.check_aligned(i_spectrum)


def avg_powers_spectral(v_spectrum, i_spectrum):
    """
    The average Hermitian, complementary and instantaneous power computed
    from the spectra of voltage and current.

    With the analytic coefficients a_k = w_k c_k the averages are

        P_H = sum_k a^v_k conj(a^i_k),
        P_C = sum over DC and Nyquist of a^v_k a^i_k,
        P = 1/2 Re{P_H + P_C},

    which equal the time averages of the Hermitian, complementary and
    instantaneous power over the record (Parseval).

    Parameters
    ----------
    v_spectrum : Spectrum
        The voltage spectrum.
    i_spectrum : Spectrum
        The current spectrum on the same grid.

    Returns
    -------
    averages : SpectralAverages
        The averages. Unpacking yields (P_H, P_C, P).

    Raises
    ------
    DataError
        The spectra are not on the same grid.
    """
    _check_spectra(v_spectrum, i_spectrum)
    averages = _coefficient_averages(v_spectrum.values, i_spectrum.values,
                                     v_spectrum.weights,
                                     v_spectrum.self_conjugate,
                                     v_spectrum.omega)
    logger.debug('{0}'.format(averages))
    return averages


def _triangles_from_bins(bins, rtol):
    active = bins['active'].values
    nonactive = bins['nonactive'].values
    apparent = np.hypot(active, nonactive)
    peak = np.max(apparent, initial=0.)
    if peak == 0:
        return []
    keep = np.flatnonzero(apparent > rtol * peak)
    return [FrequencyPowerTriangle(bins['omega'].values[k], apparent[k],
                                   active[k], nonactive[k]) for k in keep]


def per_frequency_triangles(v_spectrum, i_spectrum, rtol=TRIANGLE_RTOL):
    """
    The power triangles of the single frequency bins. The active power of a
    bin is Re{w_k V_k I_k*} and the non-active power Im{w_k V_k I_k*}, such
    that a single tone yields the triangle of the sinusoidal power summary
    and the active powers sum up to the average power.

    Parameters
    ----------
    v_spectrum : Spectrum
        The voltage spectrum.
    i_spectrum : Spectrum
        The current spectrum.
    rtol : float, optional
        Bins with an apparent power below rtol times the largest apparent
        power are dropped. Default is 1e-9.

    Returns
    -------
    triangles : list(FrequencyPowerTriangle)
        The triangles of the bins with non-zero apparent power. The list is
        empty if one of the spectra is zero.
    """
    averages = avg_powers_spectral(v_spectrum, i_spectrum)
    return _triangles_from_bins(averages.bins, rtol)


def triangles_to_frame(triangles):
    """
    Convert power triangles into a pandas.DataFrame with the columns omega,
    apparent, active and nonactive.
    """
    columns = ['omega', 'apparent', 'active', 'nonactive']
    records = [[getattr(t, c) for c in columns] for t in triangles]
    return pd.DataFrame(records, columns=columns, dtype=float)


def broadband_pythagoras_gap(v_spectrum, i_spectrum, rtol=TRIANGLE_RTOL):
    """
    Compare the square of the summed apparent powers of the single bins with
    the sum of their squares. For two or more bins with non-zero apparent
    power the square of the sum is strictly larger, the broadband apparent
    power does not form a Pythagorean triangle with broadband active and
    non-active power.

    Returns
    -------
    lhs : float
        The square of the sum, (sum apparent)^2.
    rhs : float
        The sum of squares, sum apparent^2.
    gap : float
        lhs - rhs.
    """
    triangles = per_frequency_triangles(v_spectrum, i_spectrum, rtol)
    if len(triangles) < 2:
        logger.debug('Only {0:d} bin with apparent power, the gap is '
                     'zero'.format(len(triangles)))
    apparent = np.array([t.apparent for t in triangles])
    lhs = float(np.sum(apparent) ** 2)
    rhs = float(np.sum(apparent ** 2))
    return lhs, rhs, lhs - rhs


def _impedance_on_bins(impedance, omega):
    if hasattr(impedance, 'complex'):
        impedance = impedance.complex
    if callable(impedance):
        values = np.array(impedance(omega), dtype=complex)
    else:
        values = np.array(impedance, dtype=complex)
    if values.ndim == 0:
        values = np.full(omega.shape, complex(values))
    if values.shape != omega.shape:
        raise DataError('The impedance needs one value per frequency bin, got '
                        '{0} for {1} bins!'.format(values.shape, omega.shape))
    return values


def thevenin_spectral(impedance, i_spectrum):
    """
    Power of a Thevenin circuit in the frequency domain, where the voltage
    spectrum is V(omega) = Z(omega) I(omega).

    Parameters
    ----------
    impedance : complex, array_like, callable or FixedImpedance
        The impedance Z(omega). Either a constant, one value per bin, a
        function of the radian frequency or an object with a complex
        attribute. At DC and at the Nyquist bin only the real part is used,
        such that the voltage stays real.
    i_spectrum : Spectrum
        The spectrum of the current.

    Returns
    -------
    averages : SpectralAverages
        The averages of the circuit. The per-bin table additionally holds
        the resistance R(omega) and the reactance X(omega); the per-bin
        Hermitian power equals 4 Z(omega) |I(omega)|^2 on the interior bins.
    v_spectrum : Spectrum
        The implied voltage spectrum.
    """
    if not isinstance(i_spectrum, Spectrum) or i_spectrum.kind != 'real':
        raise TypeError('The current needs to be given as real Spectrum!')
    omega = i_spectrum.omega
    values = _impedance_on_bins(impedance, omega)
    self_conjugate = i_spectrum.self_conjugate
    values[self_conjugate] = values[self_conjugate].real
    v_spectrum = Spectrum(i_spectrum.grid, values * i_spectrum.values,
                          kind='real', unit='volt')
    averages = avg_powers_spectral(v_spectrum, i_spectrum)
    averages.bins['resistance'] = values.real
    averages.bins['reactance'] = values.imag
    return averages, v_spectrum


def _check_lines(lines, name):
    lines = np.atleast_1d(np.asarray(lines, dtype=complex))
    if lines.ndim != 1:
        raise DataError('The {0:s} lines need to be one-dimensional!'.format(
            name))
    return lines


def line_spectra_powers(v_lines, i_lines, omega0=None):
    """
    The spectral averages for discrete line spectra, e.g. of periodic
    signals given by their harmonics. The sums over lines replace the sums
    over frequency bins.

    Parameters
    ----------
    v_lines : array_like
        The two-sided voltage coefficients V_n indexed by the harmonic
        number, index zero is the DC value. See
        :py:meth:`~powertriad.signals.generators.HarmonicSpec.line_coefficients`.
    i_lines : array_like
        The current coefficients I_n, same length as v_lines.
    omega0 : float or None, optional
        The fundamental in rad/s. If given, the per-line table holds the line
        frequencies n omega0, otherwise the harmonic numbers.

    Returns
    -------
    averages : SpectralAverages
        The averages. Empty lists give all-zero averages.

    Raises
    ------
    DataError
        The coefficient lists have a different length.
    """
    v_lines = _check_lines(v_lines, 'voltage')
    i_lines = _check_lines(i_lines, 'current')
    if v_lines.size != i_lines.size:
        raise DataError('The voltage has {0:d} lines and the current {1:d} '
                        'lines!'.format(v_lines.size, i_lines.size))
    if omega0 is not None and omega0 <= 0:
        raise ValueError('The fundamental needs to be positive!')
    harmonic = np.arange(v_lines.size, dtype=float)
    omega = harmonic if omega0 is None else harmonic * omega0
    self_conjugate = harmonic == 0
    weights = np.where(self_conjugate, 1., 2.)
    return _coefficient_averages(v_lines, i_lines, weights, self_conjugate,
                                 omega)


def line_triangles(v_lines, i_lines, omega0, rtol=TRIANGLE_RTOL):
    """
    The power triangles of the lines of two discrete line spectra.
    """
    averages = line_spectra_powers(v_lines, i_lines, omega0)
    return _triangles_from_bins(averages.bins, rtol)
