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
import logging

# External modules

# Internal modules


logger = logging.getLogger(__name__)


class PowerTriadError(Exception):
    """
    Base class for every error raised by powertriad itself.
    """
    exit_code = 1


class DataError(PowerTriadError, ValueError):
    """
    The given data is malformed or the data sets are not aligned, e.g.
    non-finite samples, different sampling grids or a malformed csv line.
    """
    exit_code = 3


class NumericValidityError(PowerTriadError, ValueError):
    """
    A numerical hypothesis of an operation is violated, e.g. the Nyquist
    criterion or the bandwidth condition of Bedrosian's theorem.
    """
    exit_code = 4


class EstimationError(NumericValidityError):
    """
    The frequency estimator could not find a dominant spectral peak.
    """
