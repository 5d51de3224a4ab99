#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 12.03.24
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
import json
import functools

# External modules
import numpy as np
import pandas as pd

# Internal modules
from powertriad.exceptions import DataError
from powertriad.utilities.multiproc_util import MultiThread
from powertriad.utilities.numerics import wrap_angle
from .decomposition import closed_form_pos_neg_averages
from .series import PowerSeries


logger = logging.getLogger(__name__)


NEGATIVE_RTOL = 1e-12

summary_fields = ['apparent_S', 'active_P', 'nonactive_Q', 'power_angle',
                  'power_factor', 'avg_positive', 'avg_negative',
                  'negative_fraction']


class PowerSummary(object):
    """
    Averaged power quantities of a voltage-current pair on the scale V I / 2
    of the sinusoidal apparent power.

    Parameters
    ----------
    apparent : float
        The apparent power S.
    active : float
        The active power P.
    nonactive : float
        The non-active power Q.
    avg_positive : float
        The average of the positive power.
    avg_negative : float
        The average of the negative power.
    negative_fraction : float
        The fraction of time with negative instantaneous power.

    Notes
    -----
    The power angle is atan2(Q, P) and the power factor its cosine. If the
    apparent power vanishes, both the power angle and the power factor are
    set to zero.
    """
    def __init__(self, apparent, active, nonactive, avg_positive,
                 avg_negative, negative_fraction):
        self.apparent = float(apparent)
        self.active = float(active)
        self.nonactive = float(nonactive)
        self.avg_positive = float(avg_positive)
        self.avg_negative = float(avg_negative)
        if not 0 <= negative_fraction <= 1:
            raise ValueError('The negative fraction needs to be within '
                             '[0, 1]!')
        self.negative_fraction = float(negative_fraction)

    def __repr__(self):
        return 'PowerSummary(S={0:.6g}, P={1:.6g}, Q={2:.6g}, pf={3:.6g})'. \
            format(self.apparent, self.active, self.nonactive,
                   self.power_factor)

    @classmethod
    def from_sinusoid(cls, V, I, theta, phi):
        """
        The closed-form summary of the sinusoidal pair
        V cos(omega0 t + theta), I cos(omega0 t + phi).
        """
        delta = wrap_angle(theta - phi)
        apparent = V * I / 2
        avg_positive, avg_negative = closed_form_pos_neg_averages(V, I, theta,
                                                                  phi)
        negative_fraction = abs(delta) / np.pi if apparent > 0 else 0.
        return cls(apparent, apparent * np.cos(delta),
                   apparent * np.sin(delta), avg_positive, avg_negative,
                   negative_fraction)

    @property
    def power_angle(self):
        if self.apparent == 0:
            return 0.
        return float(np.arctan2(self.nonactive, self.active))

    @property
    def power_factor(self):
        if self.apparent == 0:
            return 0.
        return float(np.cos(self.power_angle))

    def to_dict(self):
        return {
            'apparent_S': self.apparent,
            'active_P': self.active,
            'nonactive_Q': self.nonactive,
            'power_angle': self.power_angle,
            'power_factor': self.power_factor,
            'avg_positive': self.avg_positive,
            'avg_negative': self.avg_negative,
            'negative_fraction': self.negative_fraction,
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def _window_slice(series, window):
    if window is None:
        return series.valid_slice
    if isinstance(window, slice):
        return window
    start, stop = window
    return slice(start, stop)


def _summary_from_series(series, window=None):
    selected = _window_slice(series, window)
    hermitian = series.hermitian[selected]
    if hermitian.size == 0:
        raise DataError('The averaging window is empty!')
    instantaneous = series.instantaneous[selected]
    threshold = NEGATIVE_RTOL * np.max(np.abs(instantaneous))
    return PowerSummary(
        apparent=0.5 * np.mean(np.abs(hermitian)),
        active=0.5 * np.mean(hermitian.real),
        nonactive=0.5 * np.mean(hermitian.imag),
        avg_positive=np.mean(series.positive[selected]),
        avg_negative=np.mean(series.negative[selected]),
        negative_fraction=np.mean(instantaneous < -threshold)
    )


def power_summary(source, window=None):
    """
    Summarize the power of a voltage-current pair.

    Parameters
    ----------
    source : PowerSeries or tuple(float, float, float, float)
        Either a power series or the sinusoidal parameters (V, I, theta, phi).
    window : slice, tuple(int, int) or None, optional
        The averaging window of a series in samples. For periodic signals the
        window should cover an integer number of periods. Default is the
        whole series without flagged transients.

    Returns
    -------
    summary : PowerSummary
        S = 1/2 mean|p_H|, P = 1/2 mean Re{p_H}, Q = 1/2 mean Im{p_H}; the
        averages of positive and negative power and the negative fraction
        are taken from the instantaneous power.

    Raises
    ------
    DataError
        The window is empty.
    """
    if isinstance(source, PowerSeries):
        return _summary_from_series(source, window)
    try:
        V, I, theta, phi = source
    except (TypeError, ValueError):
        raise TypeError('The source needs to be a PowerSeries or a tuple '
                        '(V, I, theta, phi)!')
    return PowerSummary.from_sinusoid(V, I, theta, phi)


def _window_summary(bounds, series):
    start, stop = bounds
    return _summary_from_series(series, slice(start, stop))


def windowed_summaries(series, window, processes=1, progress=False):
    """
    Short-term power summaries over consecutive, non-overlapping windows. A
    trailing partial window is dropped.

    Parameters
    ----------
    series : PowerSeries
        The power series.
    window : int
        The window length in samples.
    processes : int, optional
        The number of threads to summarize the windows. Default is 1.
    progress : bool, optional
        If a progress bar should be shown. Default is False.

    Returns
    -------
    summaries : pandas.DataFrame
        One row per window with the start time t and the summary fields.
    """
    if not isinstance(series, PowerSeries):
        raise TypeError('The windowed summaries need a PowerSeries!')
    if window < 1:
        raise ValueError('The window needs at least one sample!')
    valid = series.valid_slice
    starts = range(valid.start, valid.stop - window + 1, window)
    bounds = [(start, start + window) for start in starts]
    if not bounds:
        raise DataError('The series is shorter than a single window!')
    mapper = MultiThread(processes=processes, threads=True, progress=progress)
    summaries = mapper.map(functools.partial(_window_summary, series=series),
                           bounds)
    frame = pd.DataFrame([s.to_dict() for s in summaries],
                         columns=summary_fields)
    frame.insert(0, 't', series.times[[b[0] for b in bounds]])
    return frame
