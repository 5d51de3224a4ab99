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
import logging
import re

# External modules

# Internal modules


logger = logging.getLogger(__name__)


class ConfigBuilder(object):
    def __init__(self, description):
        """
        Class to decode a run configuration. The configuration grammar is
        line based:

        .. code::

            # a comment line
            block_size = 3200
            omega0 = 376.99111843077515
            hilbert = "fir"
            fir_taps = 255

        Every line contains a single ``key = value`` pair. Keys are the
        destinations of the command line options (dashes are replaced by
        underscores). Values separated by spaces are decoded into lists,
        numbers are decoded into floats and quoted values are kept as string.
        Lines without a key are appended to the value of the previous key.

        Parameters
        ----------
        description : str, list(str) or dict
            The configuration. This could be a path to a configuration file, a
            configuration string, a list of configuration lines or an already
            decoded dict.

        Attributes
        ----------
        config : dict(str, str/float/list)
            The decoded configuration.
        """
        self._config = {}
        self.config = description

    @property
    def config(self):
        return self._config

    @config.setter
    def config(self, description):
        if isinstance(description, str):
            config_str = self.open_string(description)
            config_dict = self.decode_str(config_str)
        elif isinstance(description, list):
            config_dict = self.decode_str(description)
        elif isinstance(description, dict):
            config_dict = description
        else:
            raise TypeError('The given configuration has to be a string, a '
                            'list or a dict!')
        self._config = config_dict

    @staticmethod
    def open_string(path_str):
        """
        Check if the given str is a path and read it, otherwise the str is
        returned unchanged.

        Parameters
        ----------
        path_str : str
            This string is checked and if it is a path it will be read.

        Returns
        -------
        config_str : str
            The given str or the read str.
        """
        if not isinstance(path_str, str):
            raise TypeError('The given path has to be a str!')
        try:
            with open(path_str, 'r') as cf:
                config_str = cf.read()
            logger.info('Read configuration from {0:s}'.format(path_str))
        except (FileNotFoundError, OSError):
            config_str = path_str
        return config_str

    @staticmethod
    def decode_str(config_str):
        """
        Decode the given configuration lines into a python dict.

        Steps to decode the configuration string:
            1) String splitting by new line delimiter
            2) Clean the lines from unallowed characters
            3) Split the non-comment lines to key, value pairs
            4) Append elements where no key, value pair is available to the
               previous value
            5) Clean and split the key, value elements from spaces
            6) Convert the values to float numbers

        Parameters
        ----------
        config_str : str or list(str)
            If this is a string the string will be split by new line into a
            list. Every list entry has only one key = value entry.

        Returns
        -------
        config_dict : dict(str, str or float or list)
            The decoded configuration.
        """
        if isinstance(config_str, str):
            config_lines = list(config_str.split('\n'))
        elif isinstance(config_str, list):
            config_lines = config_str
        else:
            raise TypeError('The given config_str has to be a str or a list of '
                            'str!')
        preprocessed_lines = [re.sub(r'[^0-9a-zA-Z=#"_\.\-\+ ]+', '', line)
                              for line in config_lines]
        splitted_lines = [line.split('=', 1) for line in preprocessed_lines
                          if len(line.strip()) > 0
                          and not line.strip().startswith('#')]

        def clean_value(val):
            if '"' in val:
                val = [val.replace('"', '').strip(), ]
            else:
                val = list(filter(None, val.split(' ')))
            return val
        cleaned_lines = []
        for line in splitted_lines:
            line[-1] = clean_value(line[-1])
            if len(line) == 1 and cleaned_lines:
                cleaned_lines[-1][-1].extend(line[0])
            elif len(line) == 2:
                line[0] = line[0].strip().replace('-', '_')
                cleaned_lines.append(line)
        config_dict = {l[0]: l[1] for l in cleaned_lines if l[0]}
        for k in config_dict:
            try:
                config_dict[k] = [float(val) for val in config_dict[k]]
            except ValueError:
                pass
            if len(config_dict[k]) == 1:
                config_dict[k] = config_dict[k][0]
        return config_dict

    def defaults_for(self, known_keys):
        """
        Select the configuration values which could be used as defaults for
        the given option destinations. Float values of integer options are
        converted back to integers by the caller's argument parser types.

        Parameters
        ----------
        known_keys : iterable(str)
            The option destinations which are known by the caller.

        Returns
        -------
        defaults : dict(str, obj)
            The configuration entries with known keys.
        """
        known_keys = set(known_keys)
        unknown = sorted(set(self._config) - known_keys)
        if unknown:
            logger.warning('Unknown configuration keys are ignored: '
                           '{0:s}'.format(', '.join(unknown)))
        return {k: v for k, v in self._config.items() if k in known_keys}
