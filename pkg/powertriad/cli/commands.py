#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 19.03.24
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
The implementations of the command line sub-commands. Every command writes
its outputs and exactly one run manifest and returns the exit code.
"""

# System modules
import logging
import itertools
import json
import os
import sys

# External modules
import numpy as np
import pandas as pd

# Internal modules
from powertriad.exceptions import DataError, NumericValidityError
from powertriad.hilbert.bedrosian import bedrosian_check
from powertriad.hilbert.fir import HilbertFirDesign, phase_split_fir
from powertriad.hilbert.spectral import phase_split
from powertriad.meter.config import MeterConfig
from powertriad.meter.pipeline import run_meter, record_fields
from powertriad.power.series import power_series
from powertriad.power.summary import power_summary, windowed_summaries
from powertriad.signals.generators import SinusoidSpec, HarmonicSpec, \
    ModulatedSpec, gen_sinusoid, gen_harmonic, gen_modulated
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.io import FLOAT_FORMAT, read_waveform_csv, \
    write_waveform_csv, iter_waveform_csv, iter_raw_pairs, grid_from_times, \
    check_stream_times
from powertriad.spectral.averages import avg_powers_spectral, \
    per_frequency_triangles, triangles_to_frame, broadband_pythagoras_gap
from powertriad.spectral.spectrum import Spectrum
from .demos import available_demos
from .manifest import RunManifest


logger = logging.getLogger(__name__)


def parameters_of(args):
    """
    The parsed arguments without the internal dispatch entries.
    """
    return {k: v for k, v in sorted(vars(args).items())
            if k not in ('func', 'config', 'verbose', 'quiet')}


def write_json(path, content):
    with open(path, 'w') as fh:
        json.dump(content, fh, indent=2, sort_keys=True)
        fh.write('\n')
    logger.info('Wrote {0:s}'.format(path))


def parse_term(term_str):
    """
    Parse a harmonic term ``m,A,theta``.
    """
    try:
        m, amplitude, theta = term_str.split(',')
        return int(m), float(amplitude), float(theta)
    except ValueError:
        raise ValueError('A harmonic term needs the form m,A,theta, got '
                         '"{0}"!'.format(term_str))


def _generation_grid(args, omega0):
    if args.n_samples is not None:
        return SamplingGrid(args.fs, args.n_samples, args.t0)
    return SamplingGrid.for_periods(omega0, args.periods, sample_rate=args.fs,
                                    t0=args.t0)


def _generate_sinusoid(args):
    grid = _generation_grid(args, args.omega0)
    voltage = gen_sinusoid(SinusoidSpec(args.v, args.theta, args.omega0),
                           grid, unit='volt')
    current = None
    if args.i is not None:
        current = gen_sinusoid(SinusoidSpec(args.i, args.phi, args.omega0),
                               grid, unit='ampere')
    return voltage, current


def _generate_harmonic(args):
    grid = _generation_grid(args, args.omega0)
    voltage = gen_harmonic(HarmonicSpec(args.omega0, args.term), grid,
                           unit='volt')
    current = None
    if args.current_term:
        current = gen_harmonic(HarmonicSpec(args.omega0, args.current_term),
                               grid, unit='ampere')
    return voltage, current


def _modulated_spec(amplitude, phase, args):
    omega_m = args.mod_ratio * args.omega0

    def envelope(t):
        return amplitude * (1 + args.am_depth * np.cos(omega_m * t))

    def phase_mod(t):
        return phase + args.phase_dev * np.sin(omega_m * t)
    return ModulatedSpec(args.omega0, envelope, phase_mod)


def _generate_modulated(args):
    grid = _generation_grid(args, args.omega0)
    v_spec = _modulated_spec(args.v, args.theta, args)
    report = bedrosian_check(v_spec, grid=grid)
    logger.info('Modulated carrier: {0}'.format(report))
    if not report.valid:
        raise NumericValidityError(
            'The envelope bandwidth {0:.6g} rad/s is not below the carrier '
            '{1:.6g} rad/s!'.format(report.envelope_bandwidth, args.omega0))
    voltage = gen_modulated(v_spec, grid, unit='volt')
    current = None
    if args.i is not None:
        current = gen_modulated(_modulated_spec(args.i, args.phi, args), grid,
                                unit='ampere')
    return voltage, current


available_generators = {
    'sinusoid': _generate_sinusoid,
    'harmonic': _generate_harmonic,
    'modulated': _generate_modulated,
}


def cmd_generate(args):
    """
    Generate a synthetic voltage and an optional current and write them as
    waveform csv.
    """
    voltage, current = available_generators[args.signal](args)
    write_waveform_csv(args.output, voltage, current)
    manifest = RunManifest('generate {0:s}'.format(args.signal),
                           parameters_of(args))
    manifest.add_output(args.output)
    manifest.write(args.manifest)
    return 0


def _read_pair(path):
    voltage, current = read_waveform_csv(path)
    if current is None:
        raise DataError('The waveform file {0} has no current column!'.format(
            path))
    return voltage, current


def _fir_design(args):
    return HilbertFirDesign(args.fir_taps, args.fir_window)


def _analytic_pair(voltage, current, args):
    if args.hilbert == 'fir':
        design = _fir_design(args)
        return (phase_split_fir(voltage, design),
                phase_split_fir(current, design))
    return phase_split(voltage), phase_split(current)


def cmd_analyze(args):
    """
    Decompose the power of a waveform csv with voltage and current. Writes the
    power series csv, the summary json and optionally windowed summaries.
    """
    voltage, current = _read_pair(args.input)
    v_tilde, i_tilde = _analytic_pair(voltage, current, args)
    series = power_series(v_tilde, i_tilde)
    series.to_csv(args.output)
    summary = power_summary(series)
    write_json(args.summary, summary.to_dict())
    manifest = RunManifest('analyze', parameters_of(args))
    manifest.add_input(args.input)
    manifest.add_output(args.output)
    manifest.add_output(args.summary)
    if args.window is not None:
        n_window = int(round(args.window * voltage.grid.sample_rate))
        frame = windowed_summaries(series, n_window, processes=args.processes,
                                   progress=args.progress)
        frame.to_csv(args.windows_output, index=False,
                     float_format=FLOAT_FORMAT)
        manifest.add_output(args.windows_output)
    manifest.write(args.manifest)
    sys.stdout.write(summary.to_json(indent=2, sort_keys=True) + '\n')
    return 0


def cmd_spectrum(args):
    """
    Tabulate the power triangles of the frequency bins of a waveform csv and
    report the gap between the square of the summed apparent powers and the
    sum of their squares.
    """
    voltage, current = _read_pair(args.input)
    v_spectrum = Spectrum.from_waveform(voltage)
    i_spectrum = Spectrum.from_waveform(current)
    triangles = per_frequency_triangles(v_spectrum, i_spectrum, args.rtol)
    triangles_to_frame(triangles).to_csv(args.output, index=False,
                                         float_format=FLOAT_FORMAT)
    lhs, rhs, gap = broadband_pythagoras_gap(v_spectrum, i_spectrum,
                                             args.rtol)
    report = {'lhs': lhs, 'rhs': rhs, 'gap': gap, 'n_bins': len(triangles)}
    report.update(avg_powers_spectral(v_spectrum, i_spectrum).to_dict())
    report = {k: float(v) if isinstance(v, np.floating) else v
              for k, v in report.items()}
    write_json(args.report, report)
    manifest = RunManifest('spectrum', parameters_of(args))
    manifest.add_input(args.input)
    manifest.add_output(args.output)
    manifest.add_output(args.report)
    manifest.write(args.manifest)
    sys.stdout.write('lhs={0!r} rhs={1!r} gap={2!r}\n'.format(lhs, rhs, gap))
    return 0


def _csv_streams(path, chunk_size, sample_rate):
    chunks = iter_waveform_csv(path, chunk_size)
    first = next(chunks, None)
    if first is None:
        raise DataError('The waveform file {0} is empty!'.format(path))
    times = first[0]
    if sample_rate is None:
        if times.size < 2:
            raise DataError('The sample rate cannot be derived from a single '
                            'sample, please set --fs!')
        sample_rate = grid_from_times(times).sample_rate
    t0 = float(times[0])
    checked = check_stream_times(itertools.chain([first], chunks),
                                 sample_rate, t0)
    voltage_chunks, current_chunks = itertools.tee(checked)
    return ((c[1] for c in voltage_chunks), (c[2] for c in current_chunks),
            sample_rate, t0)


def _raw_streams(path, chunk_size):
    voltage_chunks, current_chunks = itertools.tee(
        iter_raw_pairs(path, chunk_size))
    return (c[0] for c in voltage_chunks), (c[1] for c in current_chunks)


class NdjsonSink(object):
    """
    Write every record as a line of json.
    """
    def __init__(self, handle):
        self.handle = handle

    def __call__(self, record):
        self.handle.write(record.to_json() + '\n')


class FrameSink(object):
    """
    Collect the records for a csv export.
    """
    def __init__(self):
        self.rows = []

    def __call__(self, record):
        self.rows.append(record.to_dict())

    def to_csv(self, path):
        frame = pd.DataFrame(self.rows, columns=record_fields)
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def cmd_meter(args):
    """
    Run the block-streaming power meter over a waveform csv or a raw file of
    interleaved float64 pairs and emit one record per block.
    """
    if args.omega0 is None and not args.estimate_omega0:
        raise ValueError('Either --omega0 or --estimate-omega0 is needed!')
    chunk_size = args.chunk_size or args.block_size
    if args.raw:
        if args.fs is None:
            raise ValueError('A raw source needs --fs!')
        v_stream, i_stream = _raw_streams(args.input, chunk_size)
        sample_rate, t0 = args.fs, args.t0
    else:
        v_stream, i_stream, sample_rate, t0 = _csv_streams(
            args.input, chunk_size, args.fs)
    omega0 = None if args.estimate_omega0 else args.omega0
    nominal_omega0 = args.omega0 if args.estimate_omega0 else None
    frame_sink = FrameSink() if args.csv else None
    with open(args.output, 'w') as fh:
        sink = frame_sink if args.csv else NdjsonSink(fh)
        config = MeterConfig(sample_rate, args.block_size, omega0=omega0,
                             hilbert=args.hilbert,
                             fir_design=_fir_design(args),
                             smoothing=args.smoothing, sinks=[sink],
                             queue_size=args.queue_size, t0=t0,
                             nominal_omega0=nominal_omega0)
        logger.info('Running the meter with {0}'.format(config))
        n_records = sum(1 for _ in run_meter(v_stream, i_stream, config))
    if frame_sink is not None:
        frame_sink.to_csv(args.output)
    logger.info('Emitted {0:d} records to {1:s}'.format(n_records,
                                                         args.output))
    manifest = RunManifest('meter', parameters_of(args))
    manifest.add_input(args.input)
    manifest.add_output(args.output)
    manifest.write(args.manifest)
    return 0


def cmd_demo(args):
    """
    Run a canned demo, write its plot data and its expected-value report and
    print the report. The exit code is 4 if a check fails.
    """
    run = available_demos[args.demo][1]
    report, tables = run(args)
    os.makedirs(args.outdir, exist_ok=True)
    report_path = os.path.join(args.outdir, '{0:s}_report.json'.format(
        args.demo.replace('-', '_')))
    write_json(report_path, report.to_dict())
    manifest = RunManifest('demo {0:s}'.format(args.demo),
                           parameters_of(args))
    manifest.add_output(report_path)
    for name in sorted(tables):
        path = os.path.join(args.outdir, name)
        tables[name].to_csv(path, index=False, float_format=FLOAT_FORMAT)
        manifest.add_output(path)
    manifest.write(args.manifest)
    with pd.option_context('display.precision', 12,
                           'display.max_colwidth', 80):
        sys.stdout.write(report.to_frame().to_string(index=False) + '\n')
    if not report.passed:
        logger.error('The demo {0:s} failed at least one check'.format(
            args.demo))
        return NumericValidityError.exit_code
    return 0
