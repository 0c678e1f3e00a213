# -*- coding: utf-8 -*-
"""Command line front end: runs sweeps from configuration documents and
figure presets, and writes their datasets.

Exit codes are 0 on success, 1 when sweep points failed and 2 for invalid
configurations.
"""
import argparse
import sys

import pyvdp
from pyvdp.sweep import SWEEPS
from pyvdp.sweep.presets import PRESETS, run_preset
from pyvdp.util.config import FORMATS, parse_config
from pyvdp.util.errors import ConfigError, SweepPointError, VdpError
from pyvdp.util.hooks import SimpleStatusHook

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_CONFIG = 2

#: Configuration modes accepted by each subcommand.
SUBCOMMAND_MODES = {
    'sweep': ('drive-sweep', 'rate-sweep', 'wigner', 'classical',
              'figure-preset'),
    'wigner': ('wigner',),
    'classical': ('classical',),
}


def run_sweep(config, out_dir=None, workers=None, strict=None, fmt=None):
    """Run the sweep or preset described by `config` and write its datasets.

    Parameters
    ----------
    config : pyvdp.util.config.SweepConfig
        Validated run configuration.
    out_dir : str, optional
        Output directory. Defaults to ``config.output``, then to
        `pyvdp.util.output.get_output_dir`.
    workers : int, optional
        Overrides ``config.workers``.
    strict : bool, optional
        Overrides ``config.strict``.
    fmt : str, optional
        Overrides ``config.format``.

    Returns
    -------
    paths : list of str
        The written files.
    n_failures : int
        Number of failed points over all datasets.

    Raises
    ------
    pyvdp.util.errors.ConfigError
        If the configuration cannot be run.
    pyvdp.util.errors.SweepPointError
        In strict mode, when a point fails.

    """
    workers = config.workers if workers is None else workers
    strict = config.strict if strict is None else strict
    fmt = config.format if fmt is None else fmt
    out_dir = config.output if out_dir is None else out_dir

    if config.mode == 'figure-preset':
        datasets = run_preset(config.preset, workers, strict,
                              config.full_resolution)
    else:
        datasets = SWEEPS[config.mode]().datasets(config, workers=workers,
                                                  strict=strict)

    paths = [d.write(out_dir, fmt) for d in datasets]
    return paths, sum(d.n_failures for d in datasets)


def build_arg_parser():
    """Argument parser of the pyvdp command."""
    parser = argparse.ArgumentParser(
        prog='pyvdp',
        description='Steady-state response of the driven quantum van der '
                    'Pol oscillator.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(pyvdp.__version__))
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', metavar='DIR', default=None,
                        help='Output directory (default: config output, '
                             '$PYVDP_OUTPUT_DIR or the current directory).')
    common.add_argument('--workers', metavar='N', type=int, default=None,
                        help='Number of worker threads.')
    common.add_argument('--strict', action='store_true', default=None,
                        help='Abort at the first failing point.')
    common.add_argument('--format', choices=FORMATS, default=None,
                        help='Dataset format (default: csv).')
    common.add_argument('--quiet', action='store_true',
                        help='Do not print progress.')

    for name, help_text in (
            ('sweep', 'Run a sweep from a configuration document.'),
            ('wigner', 'Sample Wigner functions from a configuration '
                       'document.'),
            ('classical', 'Evaluate the classical steady state from a '
                          'configuration document.')):
        p = subparsers.add_parser(name, parents=[common], help=help_text)
        p.add_argument('config', help='Path of the JSON configuration.')

    p = subparsers.add_parser('figure', parents=[common],
                              help='Produce the datasets of a figure.')
    p.add_argument('name', choices=sorted(PRESETS), help='Preset name.')
    p.add_argument('--full-resolution', action='store_true',
                   help='Use the full grid resolution.')
    return parser


def _read_config(path, command):
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise ConfigError('cannot read {}: {}.'.format(path, e.strerror))
    config = parse_config(text)
    if config.mode not in SUBCOMMAND_MODES[command]:
        raise ConfigError("the {} command does not run '{}' "
                          "configurations.".format(command, config.mode),
                          field='mode')
    return config


def main(argv=None):
    """Entry point of the pyvdp command.

    Parameters
    ----------
    argv : list of str, optional
        Command line arguments, defaults to ``sys.argv[1:]``.

    Returns
    -------
    int
        The exit code.

    """
    parser = build_arg_parser()
    args = parser.parse_args(argv)

    status_hook = None
    if not args.quiet:
        status_hook = SimpleStatusHook(stream=sys.stderr)
        pyvdp.hooks.append(status_hook)

    try:
        if args.command == 'figure':
            workers = 1 if args.workers is None else args.workers
            if workers < 1:
                raise ConfigError('should be >= 1.', field='workers')
            datasets = run_preset(args.name, workers, bool(args.strict),
                                  args.full_resolution)
            paths = [d.write(args.out, args.format or 'csv')
                     for d in datasets]
            n_failures = sum(d.n_failures for d in datasets)
        else:
            config = _read_config(args.config, args.command)
            if args.workers is not None and args.workers < 1:
                raise ConfigError('should be >= 1.', field='workers')
            paths, n_failures = run_sweep(config, args.out, args.workers,
                                          args.strict, args.format)
    except ConfigError as e:
        print('pyvdp: configuration error: {}'.format(e), file=sys.stderr)
        return EXIT_CONFIG
    except SweepPointError as e:
        print('pyvdp: {}'.format(e), file=sys.stderr)
        return EXIT_FAILURES
    except VdpError as e:
        print('pyvdp: {}: {}'.format(type(e).__name__, e), file=sys.stderr)
        return EXIT_FAILURES
    finally:
        if status_hook is not None:
            pyvdp.hooks.remove(status_hook)

    for path in paths:
        print(path)
    if n_failures:
        print('pyvdp: {} point(s) failed, see the error column.'.format(
            n_failures), file=sys.stderr)
        return EXIT_FAILURES
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
