#!/bin/env python
# -*- coding: utf-8 -*-
"""
Created on 08.03.24

Created for powertriad

    Copyright (C) {2024}  {powertriad developers}

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""
# System modules
import unittest
import logging

# External modules
import numpy as np

# Internal modules
from powertriad.exceptions import DataError
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.waveform import RealWaveform, AnalyticWaveform
from powertriad.signals.generators import SinusoidSpec, HarmonicSpec, \
    ModulatedSpec, gen_sinusoid, gen_harmonic, gen_modulated
from powertriad.hilbert.spectral import phase_split
from powertriad.power.series import power_series, instantaneous_power, \
    hermitian_power, complementary_power, reconstruct_instantaneous
from powertriad.power.decomposition import active_nonactive_split, \
    positive_negative_split, closed_form_pos_neg_averages, \
    delivery_fraction, sinusoidal_power_terms
from powertriad.utilities.testcase import TestCase


logging.basicConfig(level=logging.DEBUG)
RandomState = np.random.RandomState(42)


OMEGA0 = 2 * np.pi * 60


def sinusoidal_series(V, I, theta, phi, grid):
    v = gen_sinusoid(SinusoidSpec(V, theta, OMEGA0), grid, unit='volt')
    i = gen_sinusoid(SinusoidSpec(I, phi, OMEGA0), grid, unit='ampere')
    return power_series(phase_split(v), phase_split(i))


class TestActiveNonactiveSplit(TestCase):
    def setUp(self):
        self.grid = SamplingGrid.for_periods(OMEGA0, 5, samples_per_period=64)

    def test_sinusoid_matches_closed_form_terms(self):
        series = sinusoidal_series(2., 1., 0.2, -0.9, self.grid)
        average, in_phase, quadrature = sinusoidal_power_terms(
            2., 1., 0.2, -0.9, OMEGA0, self.grid)
        self.assertRelativeClose(series.active, average + in_phase, 1e-12)
        self.assertRelativeClose(series.nonactive, quadrature, 1e-12)

    def test_in_phase_pair_has_no_nonactive_power(self):
        series = sinusoidal_series(1., 1., 0.5, 0.5, self.grid)
        self.assertAllClose(series.nonactive, 0., atol=1e-12)
        self.assertTrue(np.all(series.active >= -1e-12))

    def test_vanishing_hermitian_power_is_degenerate(self):
        hermitian = np.array([1., 0., 1j])
        complementary = np.array([1., 0., -1j])
        active, nonactive, degenerate = active_nonactive_split(hermitian,
                                                               complementary)
        np.testing.assert_array_equal(degenerate, [False, True, False])
        self.assertEqual(active[1], 0.)
        self.assertEqual(nonactive[1], 0.)
        np.testing.assert_allclose(active + nonactive,
                                   0.5 * (hermitian + complementary).real,
                                   atol=1e-15)

    def test_all_zero_power_is_degenerate(self):
        active, nonactive, degenerate = active_nonactive_split(np.zeros(4),
                                                               np.zeros(4))
        self.assertTrue(np.all(degenerate))
        np.testing.assert_array_equal(active, 0.)
        np.testing.assert_array_equal(nonactive, 0.)

    def test_misaligned_inputs_raise(self):
        with self.assertRaises(DataError):
            active_nonactive_split(np.ones(3), np.ones(2))


class TestPositiveNegativeSplit(TestCase):
    def test_array_split(self):
        positive, negative = positive_negative_split([1., -2., 0.])
        np.testing.assert_array_equal(positive, [1., 0., 0.])
        np.testing.assert_array_equal(negative, [0., -2., 0.])

    def test_waveform_split_keeps_type(self):
        p = RealWaveform(SamplingGrid(10., 3), [1., -2., 3.], unit='watt')
        positive, negative = positive_negative_split(p)
        self.assertIsInstance(positive, RealWaveform)
        self.assertEqual(negative.unit, 'watt')
        np.testing.assert_array_equal(negative.samples, [0., -2., 0.])

    def test_quadrature_pair_closed_form(self):
        avg_positive, avg_negative = closed_form_pos_neg_averages(
            np.sqrt(2), np.sqrt(2), np.pi / 2, 0.)
        self.assertAlmostEqual(avg_positive, 1 / np.pi, places=12)
        self.assertAlmostEqual(avg_negative, -1 / np.pi, places=12)
        self.assertAlmostEqual(delivery_fraction(np.pi / 2, 0.), 0.5)

    def test_in_phase_pair_never_returns_power(self):
        avg_positive, avg_negative = closed_form_pos_neg_averages(1., 1., 0.,
                                                                  0.)
        self.assertAlmostEqual(avg_positive, 0.5, places=12)
        self.assertAlmostEqual(avg_negative, 0., places=12)
        self.assertEqual(delivery_fraction(0.3, 0.3), 1.)

    def test_closed_form_matches_sampled_averages(self):
        grid = SamplingGrid.for_periods(OMEGA0, 1, samples_per_period=4096)
        for delta in np.linspace(-np.pi, np.pi, 9):
            series = sinusoidal_series(1., 2., delta, 0., grid)
            avg_positive, avg_negative = closed_form_pos_neg_averages(
                1., 2., delta, 0.)
            self.assertAlmostEqual(np.mean(series.positive), avg_positive,
                                   delta=1e-6)
            self.assertAlmostEqual(np.mean(series.negative), avg_negative,
                                   delta=1e-6)

    def test_angle_is_normalized(self):
        np.testing.assert_allclose(
            closed_form_pos_neg_averages(1., 1., 2 * np.pi, 0.),
            closed_form_pos_neg_averages(1., 1., 0., 0.), atol=1e-15)


def random_pair(grid, omega0, kind):
    if kind == 'sinusoid':
        v_spec = SinusoidSpec(RandomState.uniform(0.1, 10),
                              RandomState.uniform(-np.pi, np.pi), omega0)
        i_spec = SinusoidSpec(RandomState.uniform(0.1, 10),
                              RandomState.uniform(-np.pi, np.pi), omega0)
        return (gen_sinusoid(v_spec, grid, unit='volt'),
                gen_sinusoid(i_spec, grid, unit='ampere'))
    terms = [[(m, RandomState.uniform(0.1, 2),
               RandomState.uniform(-np.pi, np.pi)) for m in (1, 3, 5)]
             for _ in range(2)]
    return (gen_harmonic(HarmonicSpec(omega0, terms[0]), grid, unit='volt'),
            gen_harmonic(HarmonicSpec(omega0, terms[1]), grid,
                         unit='ampere'))


def modulated_spec(amplitude, phase, depth, phase_dev, omega0, ratio=0.05):
    omega_m = ratio * omega0

    def envelope(t):
        return amplitude * (1 + depth * np.cos(omega_m * t))

    def phase_mod(t):
        return phase + phase_dev * np.sin(omega_m * t)
    return ModulatedSpec(omega0, envelope, phase_mod,
                         envelope_bandwidth=2 * omega_m)


class TestRandomSinusoidalPairs(TestCase):
    def test_instantaneous_power_matches_closed_form(self):
        for _ in range(20):
            omega0 = 2 * np.pi * RandomState.uniform(40, 70)
            grid = SamplingGrid.for_periods(
                omega0, RandomState.randint(2, 6),
                samples_per_period=RandomState.randint(32, 128))
            V, I = RandomState.uniform(0.1, 10, size=2)
            theta, phi = RandomState.uniform(-np.pi, np.pi, size=2)
            v = gen_sinusoid(SinusoidSpec(V, theta, omega0), grid,
                             unit='volt')
            i = gen_sinusoid(SinusoidSpec(I, phi, omega0), grid,
                             unit='ampere')
            terms = sinusoidal_power_terms(V, I, theta, phi, omega0, grid)
            self.assertRelativeClose(instantaneous_power(v, i).samples,
                                     np.sum(terms, axis=0), 1e-9)
            series = power_series(phase_split(v), phase_split(i))
            self.assertRelativeClose(series.instantaneous,
                                     np.sum(terms, axis=0), 1e-9)

    def test_common_phase_rotation(self):
        alpha = np.pi / 7
        rotation = np.exp(1j * alpha)
        grid = SamplingGrid.for_periods(OMEGA0, 4, samples_per_period=64)
        for kind in ('sinusoid', 'harmonic'):
            v, i = random_pair(grid, OMEGA0, kind)
            v_tilde, i_tilde = phase_split(v), phase_split(i)
            v_rot = AnalyticWaveform(grid, v_tilde.samples * rotation,
                                     source_unit='volt')
            i_rot = AnalyticWaveform(grid, i_tilde.samples * rotation,
                                     source_unit='ampere')
            self.assertRelativeClose(hermitian_power(v_rot, i_rot),
                                     hermitian_power(v_tilde, i_tilde), 1e-12)
            self.assertRelativeClose(
                complementary_power(v_rot, i_rot),
                complementary_power(v_tilde, i_tilde) * rotation ** 2, 1e-12)


class TestReconstruction(TestCase):
    def assertReconstructs(self, v, i):
        v_tilde, i_tilde = phase_split(v), phase_split(i)
        reconstructed = reconstruct_instantaneous(
            hermitian_power(v_tilde, i_tilde),
            complementary_power(v_tilde, i_tilde))
        self.assertRelativeClose(reconstructed, v.samples * i.samples, 1e-12)

    def test_random_sinusoidal_and_harmonic_pairs(self):
        grid = SamplingGrid.for_periods(OMEGA0, 3, samples_per_period=128)
        for kind in ('sinusoid', 'harmonic'):
            for _ in range(10):
                self.assertReconstructs(*random_pair(grid, OMEGA0, kind))

    def test_modulated_pair(self):
        grid = SamplingGrid.for_periods(OMEGA0, 20, samples_per_period=64)
        for _ in range(5):
            depth_v, depth_i = RandomState.uniform(0, 0.8, size=2)
            dev_v, dev_i = RandomState.uniform(0, 0.2, size=2)
            v_spec = modulated_spec(
                RandomState.uniform(0.5, 2), RandomState.uniform(-np.pi, np.pi),
                depth_v, dev_v, OMEGA0)
            i_spec = modulated_spec(
                RandomState.uniform(0.5, 2), RandomState.uniform(-np.pi, np.pi),
                depth_i, dev_i, OMEGA0)
            v = gen_modulated(v_spec, grid, unit='volt')
            i = gen_modulated(i_spec, grid, unit='ampere')
            self.assertReconstructs(v, i)
            expected = v_spec.complex_envelope(grid) * np.conj(
                i_spec.complex_envelope(grid))
            self.assertRelativeClose(
                hermitian_power(phase_split(v), phase_split(i)), expected,
                1e-9)


if __name__ == '__main__':
    unittest.main()
