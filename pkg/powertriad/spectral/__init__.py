#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 08.03.24
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
from .spectrum import Spectrum
from .averages import SpectralAverages, FrequencyPowerTriangle, \
    avg_powers_spectral, per_frequency_triangles, triangles_to_frame, \
    broadband_pythagoras_gap, thevenin_spectral, line_spectra_powers, \
    line_triangles

__all__ = ['Spectrum', 'SpectralAverages', 'FrequencyPowerTriangle',
           'avg_powers_spectral', 'per_frequency_triangles',
           'triangles_to_frame', 'broadband_pythagoras_gap',
           'thevenin_spectral', 'line_spectra_powers', 'line_triangles']
