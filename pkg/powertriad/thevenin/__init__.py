#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 13.03.24
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
from .fixed import FixedImpedance, voltage_spec_fixed, \
    voltage_from_current_fixed, power_from_impedance_fixed
from .timevarying import TimeVaryingImpedance, voltage_from_current_tv, \
    current_from_voltage_tv, power_from_impedance_tv

__all__ = ['FixedImpedance', 'voltage_spec_fixed',
           'voltage_from_current_fixed', 'power_from_impedance_fixed',
           'TimeVaryingImpedance', 'voltage_from_current_tv',
           'current_from_voltage_tv', 'power_from_impedance_tv']
