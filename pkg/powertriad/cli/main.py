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
"""
The command line interface of powertriad.
"""

# System modules
import logging
import argparse
import os
import sys

# External modules
import numpy as np

# Internal modules
from powertriad.exceptions import PowerTriadError, DataError
from powertriad.hilbert.fir import available_windows
from powertriad.utilities.config import ConfigBuilder
from .commands import cmd_generate, cmd_analyze, cmd_spectrum, cmd_meter, \
    cmd_demo, parse_term
from .demos import available_demos


logger = logging.getLogger(__name__)


USAGE_EXIT_CODE = 2

ENVIRONMENT_HELP = """environment:
  POWERTRIAD_SEED  reserved for future noise features, currently unused

config file:
  one "key = value" pair per line, "#" starts a comment line. Keys are the
  option destinations (e.g. block_size, omega0, hilbert). Explicit flags
  override the config file, the config file overrides the defaults."""


def _add_output_arguments(parser, default):
    parser.add_argument('-o', '--output', default=default,
                        help='The output file (default: %(default)s).')
    parser.add_argument('--manifest', default=None,
                        help='The run manifest path (default: next to the '
                             'first output).')


def _add_grid_arguments(parser):
    parser.add_argument('--fs', type=float, required=True,
                        help='The sampling rate in samples/s.')
    parser.add_argument('--periods', type=float, default=10.,
                        help='The number of carrier periods (default: '
                             '%(default)s).')
    parser.add_argument('--n-samples', type=int, default=None,
                        help='The number of samples, overrides --periods.')
    parser.add_argument('--t0', type=float, default=0.,
                        help='The time of the first sample.')
    parser.add_argument('--omega0', type=float, default=2 * np.pi * 60,
                        help='The carrier in rad/s (default: 2 pi 60).')


def _add_channel_arguments(parser):
    parser.add_argument('--v', type=float, default=1.,
                        help='The voltage amplitude V.')
    parser.add_argument('--theta', type=float, default=0.,
                        help='The voltage phase theta in radians.')
    parser.add_argument('--i', type=float, default=None,
                        help='The current amplitude I, a current channel is '
                             'only written if this is given.')
    parser.add_argument('--phi', type=float, default=0.,
                        help='The current phase phi in radians.')


def _add_hilbert_arguments(parser):
    parser.add_argument('--hilbert', choices=('spectral', 'fir'),
                        default='spectral',
                        help='The Hilbert transform (default: %(default)s).')
    parser.add_argument('--fir-taps', type=int, default=255,
                        help='The odd number of FIR taps.')
    parser.add_argument('--fir-window', choices=sorted(available_windows),
                        default='hamming', help='The FIR window.')


def _build_generate(commands, parsers):
    generate = commands.add_parser('generate',
                                   help='Generate synthetic waveforms.')
    signals = generate.add_subparsers(dest='signal', metavar='signal')
    signals.required = True

    sinusoid = signals.add_parser('sinusoid', help='V cos(omega0 t + theta).')
    _add_channel_arguments(sinusoid)

    harmonic = signals.add_parser(
        'harmonic', help='sum_m A_m cos(m omega0 t + theta_m).')
    harmonic.add_argument('--term', type=parse_term, action='append',
                          required=True, help='A voltage term m,A,theta.')
    harmonic.add_argument('--current-term', type=parse_term, action='append',
                          default=None, help='A current term m,A,theta.')

    modulated = signals.add_parser(
        'modulated', help='V (1 + m cos(omega_m t)) cos(omega0 t + theta + '
                          'beta sin(omega_m t)).')
    _add_channel_arguments(modulated)
    modulated.add_argument('--am-depth', type=float, default=0.5,
                           help='The amplitude modulation depth m.')
    modulated.add_argument('--mod-ratio', type=float, default=0.05,
                           help='omega_m as fraction of the carrier.')
    modulated.add_argument('--phase-dev', type=float, default=0.,
                           help='The phase deviation beta in radians.')
    for sub in (sinusoid, harmonic, modulated):
        _add_grid_arguments(sub)
        _add_output_arguments(sub, 'waveform.csv')
        sub.set_defaults(func=cmd_generate)
        parsers.append(sub)


def _build_analyze(commands, parsers):
    analyze = commands.add_parser(
        'analyze', help='Decompose the power of a waveform csv.')
    analyze.add_argument('input', help='The waveform csv with t,v,i.')
    _add_output_arguments(analyze, 'power_series.csv')
    analyze.add_argument('--summary', default='power_summary.json',
                         help='The summary json (default: %(default)s).')
    _add_hilbert_arguments(analyze)
    analyze.add_argument('--window', type=float, default=None,
                         help='Also summarize consecutive windows of this '
                              'length in seconds.')
    analyze.add_argument('--windows-output', default='power_windows.csv',
                         help='The csv of the windowed summaries.')
    analyze.add_argument('--processes', type=int, default=1,
                         help='The threads to summarize the windows.')
    analyze.add_argument('--progress', action='store_true',
                         help='Show a progress bar for the windows.')
    analyze.set_defaults(func=cmd_analyze)
    parsers.append(analyze)


def _build_spectrum(commands, parsers):
    spectrum = commands.add_parser(
        'spectrum', help='Per-frequency power triangles of a waveform csv.')
    spectrum.add_argument('input', help='The waveform csv with t,v,i.')
    _add_output_arguments(spectrum, 'power_triangles.csv')
    spectrum.add_argument('--report', default='pythagoras_gap.json',
                          help='The gap report json (default: %(default)s).')
    spectrum.add_argument('--rtol', type=float, default=1e-9,
                          help='Bins below this fraction of the peak are '
                               'dropped.')
    spectrum.set_defaults(func=cmd_spectrum)
    parsers.append(spectrum)


def _build_meter(commands, parsers):
    meter = commands.add_parser(
        'meter', help='Run the block-streaming power meter.')
    meter.add_argument('input', help='The waveform csv or raw pair file.')
    meter.add_argument('--raw', action='store_true',
                       help='The input holds interleaved little-endian '
                            'float64 v,i pairs.')
    meter.add_argument('--fs', type=float, default=None,
                       help='The sampling rate, needed for raw input.')
    meter.add_argument('--t0', type=float, default=0.,
                       help='The time of the first raw sample.')
    meter.add_argument('--block-size', type=int, default=3200,
                       help='The samples per block (default: %(default)s).')
    meter.add_argument('--omega0', type=float, default=None,
                       help='The known carrier in rad/s. Together with '
                            '--estimate-omega0 the nominal carrier, a block '
                            'needs to cover four of its periods.')
    meter.add_argument('--estimate-omega0', action='store_true',
                       help='Estimate the carrier for every block.')
    meter.add_argument('--smoothing', type=float, default=0.2,
                       help='The smoothing factor of the estimated carrier.')
    meter.add_argument('--queue-size', type=int, default=8,
                       help='The capacity of the block queue.')
    meter.add_argument('--chunk-size', type=int, default=None,
                       help='The samples read at once (default: block '
                            'size).')
    meter.add_argument('--csv', action='store_true',
                       help='Write csv instead of newline-delimited json.')
    _add_hilbert_arguments(meter)
    _add_output_arguments(meter, 'records.ndjson')
    meter.set_defaults(func=cmd_meter)
    parsers.append(meter)


def _build_demo(commands, parsers):
    demo = commands.add_parser('demo', help='Reproduce a closed-form result.')
    demos = demo.add_subparsers(dest='demo', metavar='demo')
    demos.required = True
    for name, (add_arguments, run) in sorted(available_demos.items()):
        sub = demos.add_parser(name, help=run.__doc__.strip().split('\n')[0])
        add_arguments(sub)
        sub.add_argument('--outdir', default='demo_output',
                         help='The output directory (default: %(default)s).')
        sub.add_argument('--manifest', default=None,
                         help='The run manifest path.')
        sub.set_defaults(func=cmd_demo)
        parsers.append(sub)


def build_parser():
    """
    Build the argument parser.

    Returns
    -------
    parser : argparse.ArgumentParser
        The main parser.
    parsers : list(argparse.ArgumentParser)
        The parsers of the leaf commands, which receive the config file
        defaults.
    """
    parser = argparse.ArgumentParser(
        prog='powertriad',
        description='Generalized power analysis of voltage and current '
                    'waveforms.',
        epilog=ENVIRONMENT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_global_arguments(parser)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    parsers = []
    _build_generate(commands, parsers)
    _build_analyze(commands, parsers)
    _build_spectrum(commands, parsers)
    _build_meter(commands, parsers)
    _build_demo(commands, parsers)
    return parser, parsers


def _add_global_arguments(parser):
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='Log debug messages.')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='Only log warnings and errors.')
    parser.add_argument('--config', default=None,
                        help='A config file with key = value lines.')


def _config_default(action, value):
    if action.nargs == 0:
        return bool(value)
    if isinstance(value, list):
        return value
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    return str(value)


def _check_choices(action, value, path):
    if not action.choices:
        return
    values = value if isinstance(value, list) else [value]
    for item in values:
        converted = item
        if isinstance(item, str) and callable(action.type):
            try:
                converted = action.type(item)
            except (TypeError, ValueError):
                converted = item
        if converted not in action.choices:
            raise DataError(
                'The config file {0} sets "{1}" to "{2}", please use one of '
                '{3}!'.format(path, action.dest, item,
                              ', '.join(str(c) for c in action.choices)))


def apply_config(parsers, path):
    """
    Use the values of a config file as defaults of the leaf parsers. Options
    set by the config file are no longer required on the command line.
    """
    if not os.path.isfile(path):
        raise DataError('The config file {0} does not exist!'.format(path))
    builder = ConfigBuilder(path)
    destinations = {a.dest for sub in parsers for a in sub._actions}
    defaults = builder.defaults_for(destinations)
    for sub in parsers:
        sub_defaults = {}
        for action in sub._actions:
            if action.dest in defaults:
                action.required = False
                value = _config_default(action, defaults[action.dest])
                _check_choices(action, value, path)
                sub_defaults[action.dest] = value
        sub.set_defaults(**sub_defaults)
    logger.debug('Config defaults: {0}'.format(defaults))


def configure_logging(verbose=False, quiet=False):
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    logging.getLogger('powertriad').setLevel(level)


def main(argv=None):
    """
    Run the command line interface.

    Parameters
    ----------
    argv : list(str) or None, optional
        The arguments. Default are the arguments of the process.

    Returns
    -------
    exit_code : int
        0 on success, 3 for data errors, 4 for numeric validity errors. Usage
        errors exit with 2.
    """
    preparser = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    _add_global_arguments(preparser)
    global_args, _ = preparser.parse_known_args(argv)
    configure_logging(global_args.verbose, global_args.quiet)
    parser, parsers = build_parser()
    try:
        if global_args.config is not None:
            apply_config(parsers, global_args.config)
    except PowerTriadError as e:
        logger.error(str(e))
        return e.exit_code
    args = parser.parse_args(argv)
    logger.info('Running {0:s}'.format(args.command))
    try:
        exit_code = args.func(args)
    except PowerTriadError as e:
        logger.error(str(e))
        return e.exit_code
    except OSError as e:
        logger.error(str(e))
        return DataError.exit_code
    except (ValueError, TypeError) as e:
        logger.error(str(e))
        return USAGE_EXIT_CODE
    logger.info('Finished {0:s} with exit code {1:d}'.format(args.command,
                                                            exit_code))
    return exit_code


if __name__ == '__main__':
    sys.exit(main())
