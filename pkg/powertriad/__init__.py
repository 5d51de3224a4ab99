#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 04.03.24
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

# External modules

# Internal modules
from powertriad.signals import SamplingGrid, RealWaveform, AnalyticWaveform, \
    SinusoidSpec, HarmonicSpec, ModulatedSpec
from powertriad.hilbert import phase_split, hilbert_spectral, \
    HilbertFirDesign
from powertriad.power import power_series, power_summary, PowerSeries, \
    PowerSummary
from powertriad.spectral import Spectrum, avg_powers_spectral
from powertriad.accessor.waveform import WaveformAccessor

__all__ = ['SamplingGrid', 'RealWaveform', 'AnalyticWaveform', 'SinusoidSpec',
           'HarmonicSpec', 'ModulatedSpec', 'phase_split', 'hilbert_spectral',
           'HilbertFirDesign', 'power_series', 'power_summary', 'PowerSeries',
           'PowerSummary', 'Spectrum', 'avg_powers_spectral',
           'WaveformAccessor']

__version__ = '0.1.0'
