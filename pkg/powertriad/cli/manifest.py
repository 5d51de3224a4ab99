#!/bin/env python
# -*- coding: utf-8 -*-
#
#Created on 19.03.24
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
import hashlib
import json
import os

# External modules

# Internal modules
import powertriad


logger = logging.getLogger(__name__)


def sha256_file(path, chunk_size=1 << 20):
    """
    The hex sha256 digest of a file.
    """
    digest = hashlib.sha256()
    with open(path, 'rb') as fh:
        for chunk in iter(lambda: fh.read(chunk_size), b''):
            digest.update(chunk)
    return digest.hexdigest()


def _json_value(value):
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


class RunManifest(object):
    """
    The manifest of a single command run. It lists the input and output files
    with their sha256 checksums, echoes the parameters and the library
    version. The manifest contains no timestamps, such that identical runs
    produce identical manifests.

    Parameters
    ----------
    command : str
        The command name, e.g. ``analyze`` or ``demo czarnecki``.
    parameters : dict or None, optional
        The parameters of the run.
    """
    def __init__(self, command, parameters=None):
        self.command = command
        self.parameters = {k: _json_value(v)
                           for k, v in (parameters or {}).items()}
        self.inputs = []
        self.outputs = []

    def __repr__(self):
        return 'RunManifest({0:s}, inputs={1:d}, outputs={2:d})'.format(
            self.command, len(self.inputs), len(self.outputs))

    def add_input(self, path):
        self.inputs.append(str(path))

    def add_output(self, path):
        self.outputs.append(str(path))

    def to_dict(self):
        return {
            'command': self.command,
            'version': powertriad.__version__,
            'parameters': self.parameters,
            'inputs': [{'path': p, 'sha256': sha256_file(p)}
                       for p in self.inputs],
            'outputs': [{'path': p, 'sha256': sha256_file(p)}
                        for p in self.outputs],
        }

    def default_path(self):
        """
        The manifest path next to the first output file.
        """
        if not self.outputs:
            return 'manifest.json'
        return '{0:s}.manifest.json'.format(self.outputs[0])

    def write(self, path=None):
        path = self.default_path() if path is None else path
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w') as fh:
            json.dump(self.to_dict(), fh, indent=2, sort_keys=True)
            fh.write('\n')
        logger.info('Wrote the run manifest to {0:s}'.format(path))
        return path
