#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 20.03.24
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
Canned reproductions of the closed-form results of the power theory. Every
demo computes its quantities numerically, compares them with the expected
values and tags each expectation with its provenance.
"""

# System modules
import logging

# External modules
import numpy as np
import pandas as pd

# Internal modules
from powertriad.hilbert.bedrosian import bedrosian_check, bedrosian_hilbert
from powertriad.hilbert.spectral import hilbert_spectral, phase_split
from powertriad.power.decomposition import closed_form_pos_neg_averages, \
    positive_negative_split
from powertriad.power.series import instantaneous_power, power_series, \
    reconstruct_instantaneous
from powertriad.power.summary import PowerSummary, power_summary, \
    NEGATIVE_RTOL
from powertriad.power.triangle import rotating_triangle
from powertriad.signals.generators import SinusoidSpec, HarmonicSpec, \
    ModulatedSpec, gen_sinusoid, gen_harmonic
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.waveform import RealWaveform
from powertriad.spectral.averages import avg_powers_spectral, \
    per_frequency_triangles, triangles_to_frame, broadband_pythagoras_gap
from powertriad.spectral.spectrum import Spectrum
from powertriad.thevenin.fixed import FixedImpedance, \
    voltage_from_current_fixed, power_from_impedance_fixed
from powertriad.thevenin.timevarying import TimeVaryingImpedance, \
    voltage_from_current_tv, power_from_impedance_tv
from powertriad.utilities.numerics import rms


logger = logging.getLogger(__name__)


OMEGA_60HZ = 2 * np.pi * 60

available_relations = {
    'close': lambda computed, expected, tol: abs(computed - expected) <= tol,
    'greater': lambda computed, expected, tol: computed > expected,
    'less': lambda computed, expected, tol: computed < expected,
}


class DemoReport(object):
    """
    The expected-value report of a demo.

    Parameters
    ----------
    name : str
        The demo name.
    """
    columns = ['quantity', 'computed', 'relation', 'expected', 'tolerance',
               'provenance', 'passed']

    def __init__(self, name):
        self.name = name
        self.checks = []

    def __repr__(self):
        return 'DemoReport({0:s}, {1:d} checks, passed={2})'.format(
            self.name, len(self.checks), self.passed)

    def add(self, quantity, computed, expected, provenance, tolerance=1e-9,
            relation='close'):
        """
        Add a check of a computed quantity against its expected value.

        Parameters
        ----------
        quantity : str
            The name of the quantity.
        computed : float
            The computed value.
        expected : float
            The expected value or bound.
        provenance : str
            Where the expected value comes from.
        tolerance : float, optional
            The absolute tolerance of the close relation. Default is 1e-9.
        relation : str, optional
            One of close, greater (computed > expected) or less (computed <
            expected). Default is close.
        """
        if relation not in available_relations:
            raise ValueError('The relation "{0}" is not available!'.format(
                relation))
        computed = float(computed)
        expected = float(expected)
        self.checks.append({
            'quantity': quantity,
            'computed': computed,
            'relation': relation,
            'expected': expected,
            'tolerance': float(tolerance),
            'provenance': provenance,
            'passed': bool(available_relations[relation](computed, expected,
                                                         tolerance)),
        })

    def __getitem__(self, quantity):
        for check in self.checks:
            if check['quantity'] == quantity:
                return check
        raise KeyError(quantity)

    @property
    def passed(self):
        return all(c['passed'] for c in self.checks)

    def to_frame(self):
        return pd.DataFrame(self.checks, columns=self.columns)

    def to_dict(self):
        return {'demo': self.name, 'passed': self.passed,
                'checks': list(self.checks)}


def _period_grid(omega0, periods, samples_per_period):
    return SamplingGrid.for_periods(omega0, periods,
                                    samples_per_period=samples_per_period)


def _add_sinusoid_arguments(parser, samples_per_period):
    parser.add_argument('--omega0', type=float, default=OMEGA_60HZ,
                        help='The carrier in rad/s (default: 2 pi 60).')
    parser.add_argument('--samples-per-period', type=int,
                        default=samples_per_period,
                        help='The samples per carrier period.')


def add_power_triangle_arguments(parser):
    parser.add_argument('--delta', type=float, default=np.pi / 3,
                        help='The power angle theta - phi in radians.')
    parser.add_argument('--v', type=float, default=1.,
                        help='The voltage amplitude V.')
    parser.add_argument('--i', type=float, default=1.,
                        help='The current amplitude I.')
    _add_sinusoid_arguments(parser, 64)


def demo_power_triangle(args):
    """
    The fixed power triangle of a sinusoidal pair from the closed forms and
    from the full waveform path, and the table of the rotating triangle.
    """
    report = DemoReport('power-triangle')
    grid = _period_grid(args.omega0, 1, args.samples_per_period)
    closed = PowerSummary.from_sinusoid(args.v, args.i, args.delta, 0.)
    voltage = gen_sinusoid(SinusoidSpec(args.v, args.delta, args.omega0),
                           grid, unit='volt')
    current = gen_sinusoid(SinusoidSpec(args.i, 0., args.omega0), grid,
                           unit='ampere')
    series = power_series(phase_split(voltage), phase_split(current))
    numeric = power_summary(series)
    scale = args.v * args.i / 2
    for name, attr, expected, provenance in (
            ('S', 'apparent', scale, 'closed form S = VI/2'),
            ('P', 'active', scale * np.cos(args.delta),
             'closed form P = VI/2 cos(delta)'),
            ('Q', 'nonactive', scale * np.sin(args.delta),
             'closed form Q = VI/2 sin(delta)'),
            ('pf', 'power_factor', np.cos(args.delta),
             'closed form pf = cos(delta)')):
        report.add(name + ' closed', getattr(closed, attr), expected,
                   provenance)
        report.add(name + ' waveform', getattr(numeric, attr), expected,
                   provenance)
    report.add('S^2 - P^2 - Q^2', numeric.apparent ** 2 - numeric.active ** 2 -
               numeric.nonactive ** 2, 0., 'power triangle identity')
    report.add('max |p - (p_active + p_nonactive)|',
               np.max(np.abs(series.instantaneous - series.active -
                             series.nonactive)), 0.,
               'active/non-active split identity', tolerance=1e-12)
    table = rotating_triangle(args.v, args.i, args.delta, 0., args.omega0,
                              grid)
    return report, {'power_triangle.csv': table,
                    'power_triangle_series.csv': series.to_dataframe()}


def add_pos_neg_arguments(parser):
    parser.add_argument('--delta', type=float, default=np.pi / 2,
                        help='The power angle theta - phi in radians.')
    parser.add_argument('--scale', type=float, default=1.,
                        help='The sinusoidal apparent power VI/2.')
    _add_sinusoid_arguments(parser, 4096)


def _pos_neg_numeric(amplitude, delta, omega0, grid):
    voltage = gen_sinusoid(SinusoidSpec(amplitude, delta, omega0), grid,
                           unit='volt')
    current = gen_sinusoid(SinusoidSpec(amplitude, 0., omega0), grid,
                           unit='ampere')
    p = instantaneous_power(voltage, current)
    positive, negative = positive_negative_split(p)
    threshold = NEGATIVE_RTOL * np.max(np.abs(p.samples))
    fraction = np.mean(p.samples < -threshold)
    return p, positive, negative, fraction


def demo_pos_neg(args):
    """
    Positive and negative power of a sinusoidal pair, numerically integrated
    over one period and compared with the closed-form averages, plus a sweep
    over a set of power angles.
    """
    report = DemoReport('pos-neg')
    grid = _period_grid(args.omega0, 1, args.samples_per_period)
    amplitude = np.sqrt(2 * args.scale)
    tolerance = 2. / grid.n_samples
    p, positive, negative, fraction = _pos_neg_numeric(
        amplitude, args.delta, args.omega0, grid)
    avg_positive, avg_negative = closed_form_pos_neg_averages(
        amplitude, amplitude, args.delta, 0.)
    report.add('P+', np.mean(positive.samples), avg_positive,
               'closed form P+ = VI/2 cos(delta) - P-', tolerance=1e-6)
    report.add('P-', np.mean(negative.samples), avg_negative,
               'closed form P- = -VI/2 (sin|delta| - |delta| cos delta) / pi',
               tolerance=1e-6)
    report.add('negative fraction', fraction,
               abs(np.angle(np.exp(1j * args.delta))) / np.pi,
               'closed form |delta| / pi', tolerance=tolerance)
    rows = []
    for delta in (0., np.pi / 6, np.pi / 4, np.pi / 2, 3 * np.pi / 4):
        _, positive, negative, fraction = _pos_neg_numeric(
            amplitude, delta, args.omega0, grid)
        closed_positive, closed_negative = closed_form_pos_neg_averages(
            amplitude, amplitude, delta, 0.)
        rows.append([delta, closed_positive, closed_negative,
                     np.mean(positive.samples), np.mean(negative.samples),
                     fraction, delta / np.pi])
        report.add('P- at delta={0:.6f}'.format(delta),
                   np.mean(negative.samples), closed_negative,
                   'closed form P-', tolerance=1e-6)
    sweep = pd.DataFrame(rows, columns=['delta', 'closed_positive',
                                        'closed_negative', 'numeric_positive',
                                        'numeric_negative',
                                        'negative_fraction',
                                        'expected_fraction'])
    series = pd.DataFrame({'t': grid.times, 'p': p.samples,
                           'p_pos': np.maximum(p.samples, 0.),
                           'p_neg': np.minimum(p.samples, 0.)},
                          columns=['t', 'p', 'p_pos', 'p_neg'])
    return report, {'pos_neg_sweep.csv': sweep, 'pos_neg_series.csv': series}


def add_bedrosian_arguments(parser):
    _add_sinusoid_arguments(parser, 64)
    parser.add_argument('--periods', type=int, default=20,
                        help='The number of carrier periods, needs to be a '
                             'multiple of 20 for exact envelope periods.')


def _bedrosian_case(envelope, omega0, grid):
    spec = ModulatedSpec(omega0, envelope)
    report = bedrosian_check(spec, grid=grid)
    u = RealWaveform(grid, envelope(grid.times))
    carrier = gen_sinusoid(SinusoidSpec(1., 0., omega0), grid)
    product = u.with_samples(u.samples * carrier.samples)
    table = pd.DataFrame({
        't': grid.times,
        'product': product.samples,
        'hilbert_exact': hilbert_spectral(product).samples,
        'hilbert_bedrosian': bedrosian_hilbert(u, carrier).samples,
    }, columns=['t', 'product', 'hilbert_exact', 'hilbert_bedrosian'])
    return report, table


def demo_bedrosian(args):
    """
    Bedrosian's theorem for a narrowband and a wideband envelope. The
    narrowband construction agrees with the spectral Hilbert transform, the
    wideband envelope has a component above the carrier and the shortcut
    fails, even though 99.9 % of its energy lies below the carrier.
    """
    omega0 = args.omega0
    grid = _period_grid(omega0, args.periods, args.samples_per_period)
    report = DemoReport('bedrosian')

    def narrow(t):
        return 1 + 0.5 * np.cos(0.05 * omega0 * t)

    def wide(t):
        return 1 + 0.5 * np.cos(0.9 * omega0 * t) + \
            0.02 * np.cos(1.5 * omega0 * t)
    narrow_report, narrow_table = _bedrosian_case(narrow, omega0, grid)
    wide_report, wide_table = _bedrosian_case(wide, omega0, grid)
    report.add('narrowband ratio', narrow_report.ratio, 0.05,
               'modulation at 0.05 omega0', tolerance=1e-9)
    report.add('narrowband discrepancy', narrow_report.rms_discrepancy, 1e-6,
               'Bedrosian theorem holds', relation='less')
    report.add('wideband ratio', wide_report.ratio, 0.9,
               '99.9 % energy bandwidth at 0.9 omega0', tolerance=1e-9)
    report.add('wideband discrepancy', wide_report.rms_discrepancy, 1e-3,
               'component at 1.5 omega0 violates the hypothesis',
               relation='greater')
    narrow_table.insert(0, 'case', 'narrowband')
    wide_table.insert(0, 'case', 'wideband')
    return report, {'bedrosian.csv': pd.concat([narrow_table, wide_table],
                                               ignore_index=True)}


def add_czarnecki_arguments(parser):
    _add_sinusoid_arguments(parser, 64)


def demo_czarnecki(args):
    """
    The broadband apparent power is not Pythagorean: the square of the summed
    apparent powers of the frequency bins exceeds the sum of their squares.
    """
    omega0 = args.omega0
    grid = _period_grid(omega0, 1, args.samples_per_period)
    report = DemoReport('czarnecki')

    equal = gen_harmonic(HarmonicSpec(omega0, [(1, 1., 0.), (3, 1., 0.)]),
                         grid)
    equal_spectrum = Spectrum.from_waveform(equal)
    triangles = per_frequency_triangles(equal_spectrum, equal_spectrum)
    a = triangles[0].apparent
    lhs, rhs, gap = broadband_pythagoras_gap(equal_spectrum, equal_spectrum)
    report.add('equal bins apparent', a, 0.5,
               'unit amplitudes: 2 (1/2)(1/2)', tolerance=1e-12)
    report.add('equal bins gap', gap, 2 * a ** 2, 'two equal bins: 2 a^2',
               tolerance=1e-12)

    voltage = gen_harmonic(HarmonicSpec(omega0, [(1, 1., 0.), (3, 0.3, 0.4),
                                                 (5, 0.1, 1.)]),
                           grid, unit='volt')
    current = gen_harmonic(HarmonicSpec(omega0, [(1, 0.9, -0.5),
                                                 (3, 0.2, 1.2),
                                                 (5, 0.15, -0.3)]),
                           grid, unit='ampere')
    v_spectrum = Spectrum.from_waveform(voltage)
    i_spectrum = Spectrum.from_waveform(current)
    lhs, rhs, gap = broadband_pythagoras_gap(v_spectrum, i_spectrum)
    report.add('lhs', lhs, rhs, '(sum S_k)^2 > sum S_k^2', relation='greater')
    report.add('rhs', rhs, 0., 'sum S_k^2', relation='greater')
    report.add('gap', gap, 0., 'strictly positive for two or more bins',
               relation='greater')
    averages = avg_powers_spectral(v_spectrum, i_spectrum)
    time_average = np.mean(instantaneous_power(voltage, current).samples)
    report.add('spectral average power', averages.instantaneous,
               time_average, 'time average of v i', tolerance=1e-9)
    pythagoras = max(abs(t.apparent ** 2 - t.active ** 2 - t.nonactive ** 2)
                     for t in per_frequency_triangles(v_spectrum, i_spectrum))
    report.add('max per-bin |S^2 - P^2 - Q^2|', pythagoras, 0.,
               'Pythagoras per bin', tolerance=1e-12)
    frame = triangles_to_frame(per_frequency_triangles(v_spectrum, i_spectrum))
    return report, {'czarnecki_triangles.csv': frame}


def add_thevenin_tv_arguments(parser):
    _add_sinusoid_arguments(parser, 64)
    parser.add_argument('--mod-ratio', type=float, default=0.05,
                        help='The variation frequency of the impedance as '
                             'fraction of the carrier.')


def _quarter_period_impulse(grid, modulation, impedance, samples_per_period):
    """
    Impulse response of a*(R + jX): an impulse of R at lag zero and an
    impulse of -X delayed by a quarter period, which turns into +jX at the
    carrier.
    """
    quarter = samples_per_period // 4
    impulse = np.zeros((grid.n_samples, quarter + 1))
    impulse[:, 0] = impedance.resistance * grid.sample_rate * modulation
    impulse[:, quarter] = -impedance.reactance * grid.sample_rate * modulation
    return impulse


def demo_thevenin_tv(args):
    """
    A time-varying impedance (1 + 0.2 cos(omega_m t)) (3 + 4j) driven by the
    current sqrt(2) cos(omega0 t), computed by the carrier response and by
    the direct lag summation, and the fixed 3-4-5 circuit for reference.
    """
    if args.samples_per_period % 4:
        raise ValueError('The samples per period need to be a multiple of 4!')
    omega0 = args.omega0
    periods = int(round(1. / args.mod_ratio))
    grid = _period_grid(omega0, periods, args.samples_per_period)
    report = DemoReport('thevenin-tv')
    current_amplitude = np.sqrt(2)
    fixed = FixedImpedance(3., 4.)

    series_fixed, closed = power_from_impedance_fixed(
        fixed, current_amplitude, 0., omega0, grid)
    voltage, current = voltage_from_current_fixed(
        fixed, SinusoidSpec(current_amplitude, 0., omega0), grid)
    waveform = power_summary(power_series(phase_split(voltage),
                                          phase_split(current)))
    for name, attr, expected in (('S', 'apparent', 5.), ('P', 'active', 3.),
                                 ('Q', 'nonactive', 4.)):
        report.add('fixed {0:s} closed'.format(name), getattr(closed, attr),
                   expected, '3-4-5 circuit with I^2 / 2 = 1')
        report.add('fixed {0:s} waveform'.format(name),
                   getattr(waveform, attr), expected,
                   '3-4-5 circuit with I^2 / 2 = 1')

    modulation = 1 + 0.2 * np.cos(args.mod_ratio * omega0 * grid.times)
    impedance = TimeVaryingImpedance(
        grid, response_at_carrier=modulation * fixed.complex, carrier=omega0,
        impulse_response=_quarter_period_impulse(grid, modulation, fixed,
                                                 args.samples_per_period))
    i_spec = SinusoidSpec(current_amplitude, 0., omega0)
    v_carrier, i_wave, v_convolution = voltage_from_current_tv(impedance,
                                                               i_spec)
    report.add('voltage path rms difference',
               rms(v_carrier.samples - v_convolution.samples), 1e-4,
               'carrier response equals lag summation', relation='less')
    report.add('impedance bandwidth ratio',
               v_carrier.attrs['bandwidth_ratio'], args.mod_ratio,
               'variation at mod-ratio omega0', tolerance=1e-9)
    series = power_from_impedance_tv(impedance, current_amplitude, 0., omega0)
    product = v_carrier.samples * i_wave.samples
    reconstructed = reconstruct_instantaneous(series.hermitian,
                                              series.complementary)
    report.add('max relative |p - v i|',
               np.max(np.abs(reconstructed - product)) /
               np.max(np.abs(product)), 0., 'reconstruction identity',
               tolerance=1e-12)
    summary = power_summary(series)
    for name, attr, expected in (('S', 'apparent', 5.), ('P', 'active', 3.),
                                 ('Q', 'nonactive', 4.)):
        report.add('time-varying {0:s}'.format(name), getattr(summary, attr),
                   expected, 'mean of the variation is one')
    response = impedance.carrier_response(omega0)
    table = pd.DataFrame({
        't': grid.times, 'i': i_wave.samples, 'v_carrier': v_carrier.samples,
        'v_convolution': v_convolution.samples, 'p': series.instantaneous,
        'p_active': series.active, 'p_nonactive': series.nonactive,
        're_Z': response.real, 'im_Z': response.imag,
    }, columns=['t', 'i', 'v_carrier', 'v_convolution', 'p', 'p_active',
                'p_nonactive', 're_Z', 'im_Z'])
    return report, {'thevenin_tv.csv': table,
                    'thevenin_fixed_series.csv': series_fixed.to_dataframe()}


available_demos = {
    'power-triangle': (add_power_triangle_arguments, demo_power_triangle),
    'pos-neg': (add_pos_neg_arguments, demo_pos_neg),
    'bedrosian': (add_bedrosian_arguments, demo_bedrosian),
    'czarnecki': (add_czarnecki_arguments, demo_czarnecki),
    'thevenin-tv': (add_thevenin_tv_arguments, demo_thevenin_tv),
}
