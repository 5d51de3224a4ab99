#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 05.03.24
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
from .grid import SamplingGrid
from .waveform import RealWaveform, AnalyticWaveform, Envelope
from .generators import SinusoidSpec, HarmonicSpec, ModulatedSpec, \
    gen_sinusoid, gen_harmonic, gen_modulated
from .demodulation import complex_demodulate, quadrature_demodulate, \
    instantaneous_frequency

__all__ = ['SamplingGrid', 'RealWaveform', 'AnalyticWaveform', 'Envelope',
           'SinusoidSpec', 'HarmonicSpec', 'ModulatedSpec', 'gen_sinusoid',
           'gen_harmonic', 'gen_modulated', 'complex_demodulate',
           'quadrature_demodulate', 'instantaneous_frequency']
