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
from .spectral import hilbert_spectral, phase_split, spectral_representations
from .fir import HilbertFirDesign, hilbert_fir, phase_split_fir
from .bedrosian import BedrosianReport, bedrosian_hilbert, bedrosian_check, \
    envelope_bandwidth

__all__ = ['hilbert_spectral', 'phase_split', 'spectral_representations',
           'HilbertFirDesign', 'hilbert_fir', 'phase_split_fir',
           'BedrosianReport', 'bedrosian_hilbert', 'bedrosian_check',
           'envelope_bandwidth']
