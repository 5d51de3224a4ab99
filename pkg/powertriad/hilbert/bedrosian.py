#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 09.03.24
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

# Internal modules
from powertriad.exceptions import DataError
from powertriad.signals.generators import ModulatedSpec, gen_modulated
from powertriad.signals.waveform import RealWaveform, Envelope
from powertriad.utilities.numerics import rms, envelope_bandwidth, \
    ENERGY_FRACTION
from .spectral import hilbert_spectral


logger = logging.getLogger(__name__)


class BedrosianReport(object):
    """
    The result of a bandwidth check for Bedrosian's theorem. The theorem
    H{u v} = u H{v} holds if the envelope bandwidth is smaller than the
    carrier, valid is True if and only if ratio < 1.

    Parameters
    ----------
    envelope_bandwidth : float
        The envelope bandwidth in rad/s.
    carrier : float
        The carrier omega0 in rad/s.
    rms_discrepancy : float or None, optional
        The relative RMS difference between the Bedrosian shortcut and the
        spectral Hilbert transform of the product, if it was measured.
    declared : bool, optional
        If the bandwidth was declared instead of measured. Default is False.
    """
    def __init__(self, envelope_bandwidth, carrier, rms_discrepancy=None,
                 declared=False):
        if envelope_bandwidth < 0:
            raise ValueError('The envelope bandwidth needs to be '
                             'non-negative!')
        if carrier <= 0:
            raise ValueError('The carrier needs to be positive!')
        if rms_discrepancy is not None and rms_discrepancy < 0:
            raise ValueError('The rms discrepancy needs to be non-negative!')
        self.envelope_bandwidth = float(envelope_bandwidth)
        self.carrier = float(carrier)
        self.rms_discrepancy = rms_discrepancy
        self.declared = declared

    def __repr__(self):
        return 'BedrosianReport(bandwidth={0:.6g}, carrier={1:.6g}, ' \
               'ratio={2:.6g}, valid={3})'.format(self.envelope_bandwidth,
                                                  self.carrier, self.ratio,
                                                  self.valid)

    @property
    def ratio(self):
        return self.envelope_bandwidth / self.carrier

    @property
    def valid(self):
        return self.ratio < 1

    def to_dict(self):
        return {
            'envelope_bandwidth': self.envelope_bandwidth,
            'carrier': self.carrier,
            'ratio': self.ratio,
            'valid': bool(self.valid),
            'rms_discrepancy': self.rms_discrepancy,
            'declared': self.declared,
        }


def bedrosian_hilbert(u, v):
    """
    Hilbert transform of a product with Bedrosian's theorem,
    H{u v} = u H{v}, where u is the lowpass and v the highpass factor. The
    validity of the band split is not checked, see
    :py:func:`~powertriad.hilbert.bedrosian.bedrosian_check`.

    Parameters
    ----------
    u : RealWaveform
        The lowpass factor.
    v : RealWaveform
        The highpass factor.

    Returns
    -------
    product_hat : RealWaveform
        The shortcut u H{v} with the unit of v.
    """
    if not isinstance(u, RealWaveform) or not isinstance(v, RealWaveform):
        raise TypeError('Both factors need to be RealWaveforms!')
    u.check_aligned(v)
    return v.with_samples(u.samples * hilbert_spectral(v).samples)


def _modulated_discrepancy(spec, grid):
    """
    Relative RMS difference between the Bedrosian analytic construction
    A sin(omega0 t + theta) and the spectral Hilbert transform of the
    modulated carrier.
    """
    carrier = gen_modulated(spec, grid)
    oracle = hilbert_spectral(carrier).samples
    envelope, phase = spec.tabulate(grid)
    shortcut = envelope * np.sin(spec.omega0 * grid.times + phase)
    reference = rms(carrier.samples)
    if reference == 0:
        return 0.
    return rms(shortcut - oracle) / reference


def bedrosian_check(source, omega0=None, grid=None, fraction=ENERGY_FRACTION):
    """
    Check the bandwidth hypothesis of Bedrosian's theorem for a modulated
    carrier.

    Parameters
    ----------
    source : ModulatedSpec or Envelope
        Either a modulated carrier specification or a measured complex
        envelope. For a specification with declared envelope bandwidth the
        declared bandwidth is used, otherwise the envelope is tabulated on
        the grid and its bandwidth is measured.
    omega0 : float or None, optional
        The carrier in rad/s. Defaults to the carrier of the source.
    grid : SamplingGrid or None, optional
        The grid to tabulate a specification on. If a grid is given for a
        specification, the RMS discrepancy of the Bedrosian construction
        against the spectral Hilbert transform is measured, too.
    fraction : float, optional
        The energy fraction of the bandwidth estimate. Default is 0.999.

    Returns
    -------
    report : BedrosianReport
        The bandwidth report.

    Raises
    ------
    DataError
        There is no envelope to measure: neither a declared bandwidth nor a
        grid was given for a specification, or the envelope is empty.
    """
    if isinstance(source, ModulatedSpec):
        omega0 = source.omega0 if omega0 is None else omega0
        discrepancy = None
        if grid is not None:
            discrepancy = _modulated_discrepancy(source, grid)
        if source.envelope_bandwidth is not None:
            report = BedrosianReport(source.envelope_bandwidth, omega0,
                                     discrepancy, declared=True)
        elif grid is not None:
            bandwidth = envelope_bandwidth(source.complex_envelope(grid),
                                           grid.sample_rate, fraction)
            report = BedrosianReport(bandwidth, omega0, discrepancy)
        else:
            raise DataError('Neither a declared envelope bandwidth nor a grid '
                            'to tabulate the envelope is given!')
    elif isinstance(source, Envelope):
        omega0 = source.omega0 if omega0 is None else omega0
        samples = source.samples[source.valid_slice]
        bandwidth = envelope_bandwidth(samples, source.grid.sample_rate,
                                       fraction)
        report = BedrosianReport(bandwidth, omega0)
    else:
        raise TypeError('The source needs to be a ModulatedSpec or an '
                        'Envelope!')
    logger.debug('{0}'.format(report))
    return report
