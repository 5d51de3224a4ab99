#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 11.03.24
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
from .decomposition import active_nonactive_split, positive_negative_split, \
    closed_form_pos_neg_averages, delivery_fraction, sinusoidal_power_terms
from .series import PowerSeries, instantaneous_power, hermitian_power, \
    complementary_power, reconstruct_instantaneous, power_series
from .summary import PowerSummary, power_summary, windowed_summaries
from .triangle import rotating_triangle

__all__ = ['active_nonactive_split', 'positive_negative_split',
           'closed_form_pos_neg_averages', 'delivery_fraction',
           'sinusoidal_power_terms', 'PowerSeries', 'instantaneous_power',
           'hermitian_power', 'complementary_power',
           'reconstruct_instantaneous', 'power_series', 'PowerSummary',
           'power_summary', 'windowed_summaries', 'rotating_triangle']
