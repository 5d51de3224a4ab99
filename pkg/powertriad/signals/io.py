#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 07.03.24
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
import pandas as pd

# Internal modules
from powertriad.exceptions import DataError
from .grid import SamplingGrid
from .waveform import RealWaveform


logger = logging.getLogger(__name__)


FLOAT_FORMAT = '%.17g'
MAX_JITTER = 1e-6


def _parse_float(value):
    try:
        return float(value)
    except (TypeError, ValueError):
        return np.nan


def parse_numeric_frame(frame, first_line=2):
    """
    Convert a frame of strings into floats. Every value is parsed with the
    correctly rounded float parser, such that values written with 17
    significant digits are read back exactly. The first malformed or
    non-finite value is reported with its line number within the file
    (header is line one).
    """
    numeric = frame.apply(lambda column: column.map(_parse_float))
    values = numeric.to_numpy(dtype=float)
    malformed = ~np.isfinite(values)
    if np.any(malformed):
        row, col = np.argwhere(malformed)[0]
        raise DataError('Malformed value "{0}" in column "{1}" at line '
                        '{2:d}!'.format(frame.iat[row, col],
                                        frame.columns[col],
                                        int(row) + first_line))
    return numeric.astype(float)


def grid_from_times(times, max_jitter=MAX_JITTER):
    """
    Derive a uniform sampling grid from sample times. The relative jitter of
    the time steps against the mean step has to be at most max_jitter.

    Parameters
    ----------
    times : array_like
        The sample times in seconds.
    max_jitter : float, optional
        The maximum relative jitter. Default is 1e-6.

    Returns
    -------
    grid : SamplingGrid
        The uniform grid.

    Raises
    ------
    DataError
        The times are not uniformly spaced.
    """
    times = np.asarray(times, dtype=float)
    if times.size < 2:
        raise DataError('At least two samples are needed to derive the '
                        'sampling grid!')
    steps = np.diff(times)
    mean_step = (times[-1] - times[0]) / (times.size - 1)
    if mean_step <= 0:
        raise DataError('The time axis needs to be increasing!')
    jitter = np.max(np.abs(steps - mean_step)) / mean_step
    if jitter > max_jitter:
        bad = int(np.argmax(np.abs(steps - mean_step)))
        raise DataError('The time axis is not uniform: relative jitter of '
                        '{0:.3e} between line {1:d} and {2:d}!'.format(
                            jitter, bad + 2, bad + 3))
    return SamplingGrid(1. / mean_step, times.size, float(times[0]))


def _check_header(columns, path):
    columns = [str(c).strip() for c in columns]
    if columns[:2] != ['t', 'v'] or len(columns) > 3 or \
            (len(columns) == 3 and columns[2] != 'i'):
        raise DataError('The waveform file {0} needs the header "t,v[,i]", got '
                        '"{1:s}"!'.format(path, ','.join(columns)))
    return columns


def read_waveform_csv(path, max_jitter=MAX_JITTER):
    """
    Read a waveform csv file with the header ``t,v[,i]``. The time is given
    in seconds and the values as decimal floats.

    Parameters
    ----------
    path : str or file-like
        The csv file.
    max_jitter : float, optional
        The maximum relative jitter of the time steps. Default is 1e-6.

    Returns
    -------
    voltage : RealWaveform
        The voltage samples.
    current : RealWaveform or None
        The current samples, None if the file has no current column.

    Raises
    ------
    DataError
        The header is wrong, a line is malformed or the time axis is not
        uniform.
    """
    try:
        frame = pd.read_csv(path, dtype=str, skipinitialspace=True)
    except pd.errors.ParserError as e:
        raise DataError('Malformed waveform file {0}: {1:s}'.format(path,
                                                                     str(e)))
    except pd.errors.EmptyDataError:
        raise DataError('The waveform file {0} is empty!'.format(path))
    frame.columns = _check_header(frame.columns, path)
    numeric = parse_numeric_frame(frame)
    grid = grid_from_times(numeric['t'].values, max_jitter)
    voltage = RealWaveform(grid, numeric['v'].values, unit='volt')
    current = None
    if 'i' in numeric.columns:
        current = RealWaveform(grid, numeric['i'].values, unit='ampere')
    logger.info('Read {0:d} samples from {1}'.format(grid.n_samples, path))
    return voltage, current


def iter_waveform_csv(path, chunksize):
    """
    Read a waveform csv file chunk-wise, e.g. as stream source for the meter.

    Parameters
    ----------
    path : str or file-like
        The csv file with header ``t,v,i``.
    chunksize : int
        The number of lines per chunk.

    Yields
    ------
    times : numpy.ndarray
    voltage : numpy.ndarray
    current : numpy.ndarray
    """
    first_line = 2
    try:
        reader = pd.read_csv(path, dtype=str, skipinitialspace=True,
                             chunksize=chunksize)
        for chunk in reader:
            chunk.columns = _check_header(chunk.columns, path)
            if 'i' not in chunk.columns:
                raise DataError('The meter needs a current column!')
            numeric = parse_numeric_frame(chunk, first_line)
            first_line += len(chunk)
            yield (numeric['t'].values, numeric['v'].values,
                   numeric['i'].values)
    except pd.errors.ParserError as e:
        raise DataError('Malformed waveform file {0}: {1:s}'.format(path,
                                                                     str(e)))


def check_stream_times(chunks, sample_rate, t0, max_jitter=MAX_JITTER):
    """
    Check the times of chunked waveform csv lines against the uniform grid
    t0 + k / sample_rate, across the chunk borders.

    Parameters
    ----------
    chunks : iterable(tuple)
        The (times, voltage, current) chunks of :py:func:`iter_waveform_csv`.
    sample_rate : float
        The expected sampling rate in samples/s.
    t0 : float
        The time of the first sample.
    max_jitter : float, optional
        The maximum deviation from the grid as fraction of a time step.
        Default is 1e-6.

    Yields
    ------
    chunk : tuple
        The unchanged chunks.

    Raises
    ------
    DataError
        A sample time deviates from the grid. The line number within the
        file is reported.
    """
    index = 0
    for chunk in chunks:
        times = np.asarray(chunk[0], dtype=float)
        expected = t0 + (index + np.arange(times.size)) / sample_rate
        deviation = np.abs(times - expected) * sample_rate
        if np.any(deviation > max_jitter):
            bad = int(np.argmax(deviation > max_jitter))
            raise DataError('The time {0!r} at line {1:d} is off the uniform '
                            'grid by {2:.3e} steps, expected {3!r}!'.format(
                                float(times[bad]), index + bad + 2,
                                deviation[bad], float(expected[bad])))
        index += times.size
        yield chunk


def waveforms_to_frame(voltage, current=None):
    """
    Convert a voltage and an optional current into a pandas.DataFrame with
    the columns t, v and i.
    """
    frame = pd.DataFrame({'t': voltage.times, 'v': voltage.samples})
    if current is not None:
        voltage.check_aligned(current)
        frame['i'] = current.samples
    return frame


def write_waveform_csv(path, voltage, current=None):
    """
    Write a voltage and an optional current as csv file with the header
    ``t,v[,i]``. The floats are written with 17 significant digits.
    """
    frame = waveforms_to_frame(voltage, current)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    logger.info('Wrote {0:d} samples to {1}'.format(len(frame), path))


def read_raw_pairs(path, sample_rate, t0=0.):
    """
    Read raw interleaved little-endian 64-bit float (v, i) pairs.

    Parameters
    ----------
    path : str
        The binary file.
    sample_rate : float
        The sampling rate of the pairs.
    t0 : float, optional
        The time of the first pair. Default is 0.

    Returns
    -------
    voltage : RealWaveform
    current : RealWaveform
    """
    raw = np.fromfile(path, dtype='<f8')
    if raw.size % 2:
        logger.warning('The raw file {0} has an odd number of values, the '
                       'last value is dropped'.format(path))
        raw = raw[:-1]
    pairs = raw.reshape(-1, 2)
    grid = SamplingGrid(sample_rate, pairs.shape[0], t0)
    return (RealWaveform(grid, pairs[:, 0], unit='volt'),
            RealWaveform(grid, pairs[:, 1], unit='ampere'))


def iter_raw_pairs(path, chunksize):
    """
    Read raw interleaved little-endian float64 (v, i) pairs chunk-wise.

    Yields
    ------
    voltage : numpy.ndarray
    current : numpy.ndarray
    """
    with open(path, 'rb') as fh:
        while True:
            raw = np.fromfile(fh, dtype='<f8', count=2 * chunksize)
            if raw.size == 0:
                break
            if raw.size % 2:
                logger.warning('Dropped a trailing unpaired raw value')
                raw = raw[:-1]
            pairs = raw.reshape(-1, 2)
            yield pairs[:, 0], pairs[:, 1]


def write_raw_pairs(path, voltage, current):
    """
    Write a voltage and a current as interleaved little-endian float64 pairs.
    """
    voltage.check_aligned(current)
    pairs = np.empty((voltage.grid.n_samples, 2), dtype='<f8')
    pairs[:, 0] = voltage.samples
    pairs[:, 1] = current.samples
    pairs.tofile(path)
