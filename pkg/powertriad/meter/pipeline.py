#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 15.03.24
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
A block-streaming power meter. Raw voltage and current samples are cut into
blocks, both channels are phase split, the Hermitian and complementary
powers are formed and every block is summarized into a PowerRecord.
"""

# System modules
import logging
import itertools
import json
import queue
import threading

# External modules
import numpy as np

# Internal modules
from powertriad.exceptions import DataError, EstimationError
from powertriad.hilbert.fir import hilbert_fir
from powertriad.hilbert.spectral import phase_split
from powertriad.power.series import power_series
from powertriad.power.summary import power_summary
from powertriad.signals.grid import SamplingGrid
from powertriad.signals.waveform import RealWaveform, AnalyticWaveform
from .config import MeterConfig
from .estimator import estimate_omega0, demodulate_complementary, recover_phi


logger = logging.getLogger(__name__)


record_fields = ['t', 'n_samples', 'hermitian_re', 'hermitian_im',
                 'complementary_demod_re', 'complementary_demod_im', 'S', 'P',
                 'Q', 'pf', 'phi_hat', 'omega0_hat', 'fir_bound', 'ambiguity',
                 'gap']

FIR_BOUND_WARNING = 1e-2


class PowerRecord(object):
    """
    The short-term power of a single block.

    Attributes
    ----------
    t : float
        The time of the first sample of the block.
    n_samples : int
        The number of samples of the block.
    hermitian : complex
        The block mean of the Hermitian power.
    complementary_demod : complex
        The block mean of the complementary power demodulated to baseband by
        exp(-j 2 omega0 t).
    S, P, Q, pf : float
        The apparent, active and non-active power and the power factor.
    phi_hat : float
        The recovered current phase on the branch (-pi/2, pi/2].
    omega0_hat : float
        The carrier used for this block in rad/s.
    fir_bound : float or None
        The relative error bound of S, P and Q in the fir mode, see
        :py:meth:`HilbertFirDesign.power_error_bound`. None in the spectral
        mode.
    ambiguity : bool
        If the half-angle branch of phi_hat is questionable.
    gap : bool
        If this record marks a gap in the streams. The power fields of a gap
        record are None.
    series : PowerSeries or None
        The per-sample power series, if requested.
    """
    def __init__(self, t, n_samples, hermitian=None, complementary_demod=None,
                 S=None, P=None, Q=None, pf=None, phi_hat=None,
                 omega0_hat=None, fir_bound=None, ambiguity=False, gap=False,
                 series=None):
        self.t = float(t)
        self.n_samples = int(n_samples)
        self.hermitian = hermitian
        self.complementary_demod = complementary_demod
        self.S = S
        self.P = P
        self.Q = Q
        self.pf = pf
        self.phi_hat = phi_hat
        self.omega0_hat = omega0_hat
        self.fir_bound = fir_bound
        self.ambiguity = bool(ambiguity)
        self.gap = bool(gap)
        self.series = series

    def __repr__(self):
        if self.gap:
            return 'PowerRecord(t={0:.9g}, gap of {1:d} samples)'.format(
                self.t, self.n_samples)
        return 'PowerRecord(t={0:.9g}, S={1:.6g}, P={2:.6g}, Q={3:.6g})'. \
            format(self.t, self.S, self.P, self.Q)

    @classmethod
    def gap_record(cls, t, n_samples):
        return cls(t, n_samples, gap=True)

    def to_dict(self):
        def _part(value, attr):
            return None if value is None else float(getattr(value, attr))

        def _float(value):
            return None if value is None else float(value)
        return {
            't': self.t,
            'n_samples': self.n_samples,
            'hermitian_re': _part(self.hermitian, 'real'),
            'hermitian_im': _part(self.hermitian, 'imag'),
            'complementary_demod_re': _part(self.complementary_demod, 'real'),
            'complementary_demod_im': _part(self.complementary_demod, 'imag'),
            'S': _float(self.S),
            'P': _float(self.P),
            'Q': _float(self.Q),
            'pf': _float(self.pf),
            'phi_hat': _float(self.phi_hat),
            'omega0_hat': _float(self.omega0_hat),
            'fir_bound': _float(self.fir_bound),
            'ambiguity': self.ambiguity,
            'gap': self.gap,
        }

    def to_json(self):
        return json.dumps(self.to_dict())


class MeterPipeline(object):
    """
    The sequential state machine of a single voltage-current channel pair.
    Blocks need to be fed in time order.

    In the fir mode the record of a block is emitted when the next block
    arrives, because the Hilbert transformer needs (n_taps - 1) / 2 samples
    of both neighbours. Samples without neighbours, at the start of the
    stream, after a gap and at the end, are excluded from the averages.

    Parameters
    ----------
    config : MeterConfig
        The meter configuration.
    """
    def __init__(self, config):
        if not isinstance(config, MeterConfig):
            raise TypeError('The pipeline needs a MeterConfig!')
        self.config = config
        self._omega0 = config.omega0
        self._last_t = None
        self._history = None
        self._pending = None
        self._bound_warned = False

    @property
    def omega0(self):
        """
        The current (smoothed) carrier in rad/s, None before the first
        estimate.
        """
        return self._omega0

    def _check_order(self, t0):
        if self._last_t is not None and t0 <= self._last_t:
            raise DataError('The block at {0:.9g} s is not after the previous '
                            'block at {1:.9g} s!'.format(t0, self._last_t))
        self._last_t = t0

    def _update_omega0(self, grid, voltage, current):
        if not self.config.estimate:
            return self._omega0
        error = None
        for samples in (voltage, current):
            try:
                estimate = estimate_omega0(RealWaveform(grid, samples))
                break
            except EstimationError as e:
                error = e
        else:
            if self._omega0 is None:
                raise error
            logger.warning('The carrier of the block at {0:.9g} s could not '
                           'be estimated, the previous estimate is kept: '
                           '{1:s}'.format(grid.t0, str(error)))
            return self._omega0
        if self._omega0 is None:
            self._omega0 = estimate
        else:
            alpha = self.config.smoothing
            self._omega0 = alpha * estimate + (1 - alpha) * self._omega0
        logger.debug('Block at {0:.9g} s: carrier {1:.9g} rad/s, smoothed '
                     '{2:.9g} rad/s'.format(grid.t0, estimate, self._omega0))
        return self._omega0

    def _fir_analytic(self, grid, samples, history, lookahead, unit):
        design = self.config.fir_design
        extended = np.concatenate((history, samples, lookahead))
        start = history.size
        extended_grid = SamplingGrid(grid.sample_rate, extended.size,
                                     grid.t0 - start / grid.sample_rate)
        transformed = hilbert_fir(RealWaveform(extended_grid, extended),
                                  design).samples[start:start + samples.size]
        transient = (max(0, design.delay - history.size),
                     max(0, design.delay - lookahead.size))
        return AnalyticWaveform(grid, samples + 1j * transformed,
                                source_unit=unit,
                                attrs={'transient': transient,
                                       'dc_leakage': design.dc_leakage})

    def _analytic_pair(self, grid, voltage, current, lookahead=None):
        if self.config.hilbert == 'spectral':
            return (phase_split(RealWaveform(grid, voltage, unit='volt')),
                    phase_split(RealWaveform(grid, current, unit='ampere')))
        empty = np.zeros(0)
        history_v, history_i = self._history or (empty, empty)
        lookahead_v, lookahead_i = lookahead or (empty, empty)
        delay = self.config.fir_design.delay
        self._history = (voltage[-delay:], current[-delay:])
        return (self._fir_analytic(grid, voltage, history_v, lookahead_v,
                                   'volt'),
                self._fir_analytic(grid, current, history_i, lookahead_i,
                                   'ampere'))

    def _fir_bound(self, omega0):
        if self.config.hilbert != 'fir' or omega0 is None:
            return None
        bound = self.config.fir_design.power_error_bound(
            omega0, self.config.sample_rate)
        if bound > FIR_BOUND_WARNING and not self._bound_warned:
            logger.warning('The FIR Hilbert transformer {0} deviates at the '
                           'carrier {1:.6g} rad/s, the power is only '
                           'accurate within {2:.3g} S'.format(
                               self.config.fir_design, omega0, bound))
            self._bound_warned = True
        return bound

    def _record(self, t0, voltage, current, lookahead=None):
        grid = SamplingGrid(self.config.sample_rate, voltage.size, t0)
        omega0 = self._update_omega0(grid, voltage, current)
        v_tilde, i_tilde = self._analytic_pair(grid, voltage, current,
                                               lookahead)
        series = power_series(v_tilde, i_tilde)
        summary = power_summary(series)
        valid = series.valid_slice
        times = grid.times[valid]
        hermitian = series.hermitian[valid]
        demodulated = demodulate_complementary(series.complementary[valid],
                                               omega0, times)
        phi_hat, ambiguity = 0., False
        if summary.apparent > 0:
            reference = float(np.angle(np.mean(
                i_tilde.samples[valid] * np.exp(-1j * omega0 * times))))
            estimate = recover_phi(hermitian, series.complementary[valid],
                                   omega0, times, reference=reference)
            phi_hat, ambiguity = estimate.phi, estimate.ambiguous
        return PowerRecord(
            t0, voltage.size,
            hermitian=complex(np.mean(hermitian)),
            complementary_demod=complex(np.mean(demodulated)),
            S=summary.apparent, P=summary.active, Q=summary.nonactive,
            pf=summary.power_factor, phi_hat=phi_hat, omega0_hat=omega0,
            fir_bound=self._fir_bound(omega0), ambiguity=ambiguity,
            series=series if self.config.keep_series else None)

    def process_block(self, voltage, current, t0):
        """
        Process a single block.

        Parameters
        ----------
        voltage : array_like
            The voltage samples of the block.
        current : array_like
            The current samples of the block.
        t0 : float
            The time of the first sample.

        Returns
        -------
        records : list(PowerRecord)
            The finished records. In the spectral mode this is the record of
            this block, in the fir mode the record of the previous block.

        Raises
        ------
        DataError
            The channels have a different length or the block is not in time
            order.
        """
        voltage = np.asarray(voltage, dtype=float)
        current = np.asarray(current, dtype=float)
        if voltage.shape != current.shape or voltage.ndim != 1:
            raise DataError('The voltage ({0}) and the current ({1}) of a '
                            'block are not aligned!'.format(voltage.shape,
                                                            current.shape))
        self._check_order(t0)
        if self.config.hilbert == 'spectral':
            return [self._record(t0, voltage, current)]
        records = []
        if self._pending is not None:
            delay = self.config.fir_design.delay
            records.append(self._record(
                *self._pending, lookahead=(voltage[:delay], current[:delay])))
        self._pending = (t0, voltage, current)
        return records

    def flush(self):
        """
        Emit the record of a pending block without lookahead.
        """
        records = []
        if self._pending is not None:
            records.append(self._record(*self._pending))
            self._pending = None
        return records

    def gap(self, t0, n_samples):
        """
        Mark a gap of n_samples samples starting at t0. Pending records are
        flushed and the filter history is reset.
        """
        records = self.flush()
        self._history = None
        self._check_order(t0)
        logger.warning('Gap of {0:d} samples at {1:.9g} s'.format(n_samples,
                                                                   t0))
        records.append(PowerRecord.gap_record(t0, n_samples))
        return records


def _as_chunk(chunk):
    return np.atleast_1d(np.asarray(chunk, dtype=float))


def iter_blocks(v_stream, i_stream, config):
    """
    Cut two chunked sample streams into blocks of the configured size.

    A chunk pair of a different length, or a stream which ends before the
    other, desynchronizes the channels. The buffered samples and the
    offending chunks are then reported as gap. A truncated final block is
    dropped with a warning.

    Yields
    ------
    item : tuple
        Either ('block', t0, voltage, current) or ('gap', t0, n_samples).
    """
    size = config.block_size
    position = 0
    buffer_v, buffer_i = np.zeros(0), np.zeros(0)

    def _time(index):
        return config.t0 + index / config.sample_rate

    for v_chunk, i_chunk in itertools.zip_longest(v_stream, i_stream):
        if v_chunk is None or i_chunk is None or \
                len(_as_chunk(v_chunk)) != len(_as_chunk(i_chunk)):
            lengths = [len(_as_chunk(c)) for c in (v_chunk, i_chunk)
                       if c is not None]
            n_gap = buffer_v.size + max(lengths)
            logger.warning('The voltage and current streams are out of sync '
                           'at sample {0:d}'.format(position))
            yield 'gap', _time(position), n_gap
            position += n_gap
            buffer_v, buffer_i = np.zeros(0), np.zeros(0)
            continue
        buffer_v = np.concatenate((buffer_v, _as_chunk(v_chunk)))
        buffer_i = np.concatenate((buffer_i, _as_chunk(i_chunk)))
        while buffer_v.size >= size:
            yield 'block', _time(position), buffer_v[:size], buffer_i[:size]
            position += size
            buffer_v, buffer_i = buffer_v[size:], buffer_i[size:]
    if buffer_v.size:
        logger.warning('The final block is truncated ({0:d} of {1:d} '
                       'samples) and dropped'.format(buffer_v.size, size))


_END = object()


def _put(fifo, item, stop):
    while not stop.is_set():
        try:
            fifo.put(item, timeout=0.1)
            return True
        except queue.Full:
            continue
    return False


def _produce(v_stream, i_stream, config, fifo, stop):
    try:
        for item in iter_blocks(v_stream, i_stream, config):
            if not _put(fifo, item, stop):
                return
    except Exception as e:
        _put(fifo, ('error', e), stop)
    _put(fifo, _END, stop)


def run_meter(v_stream, i_stream, config):
    """
    Run the power meter over two chunked sample streams.

    The streams are read by a producer thread into a bounded queue, such that
    a slow pipeline blocks the reader. The records are emitted in input order
    and passed to every sink of the configuration.

    Parameters
    ----------
    v_stream : iterable(array_like)
        Chunks of voltage samples.
    i_stream : iterable(array_like)
        Chunks of current samples, aligned with the voltage chunks.
    config : MeterConfig
        The meter configuration.

    Yields
    ------
    record : PowerRecord
        One record per block and a gap record per desynchronization.
    """
    pipeline = MeterPipeline(config)
    fifo = queue.Queue(maxsize=config.queue_size)
    stop = threading.Event()
    reader = threading.Thread(target=_produce, name='powertriad-meter-reader',
                              args=(v_stream, i_stream, config, fifo, stop),
                              daemon=True)
    reader.start()

    def _emit(records):
        for record in records:
            for sink in config.sinks:
                sink(record)
        return records
    try:
        while True:
            item = fifo.get()
            if item is _END:
                break
            if item[0] == 'error':
                raise item[1]
            if item[0] == 'gap':
                records = pipeline.gap(item[1], item[2])
            else:
                records = pipeline.process_block(item[2], item[3], item[1])
            for record in _emit(records):
                yield record
        for record in _emit(pipeline.flush()):
            yield record
    finally:
        stop.set()
        reader.join()
