"""Command line interface to prepare, simulate and reconstruct the visible
density matrix of two photons.
"""
from argparse import ArgumentParser
from logging import getLogger, DEBUG, INFO, Formatter, StreamHandler
from pathlib import Path

from . import __version__
from .ioqutrit import (read_counts, read_matrix, write_counts, write_matrix,
                       write_report, write_result, write_sweep)
from .measurement import simulate_counts, table1_settings
from .metrics import metrics_report
from .scenario import (SCENARIOS, METHODS, Scenario, paper_figures, prepare,
                       reconstruct, sweep_delay)
from .settings import DEFAULTS, default_seed
from .utils.exceptions import ReconstructionError, UnrecognizedFormat

lg = getLogger('hiddenqutrit')

DESCRIPTION = """
    Simulate two photons whose polarization is entangled with hidden degrees
    of freedom, and reconstruct their visible density matrix with quantum
    state tomography.
    """


def _add_scenario_arguments(parser):
    parser.add_argument('--scenario', choices=SCENARIOS,
                        help='Name of the scenario')
    parser.add_argument('--delay', type=float,
                        help='Delay between the photons (default depends on '
                        'the scenario)')
    parser.add_argument('--coherence-time', type=float,
                        default=DEFAULTS['hilbert']['coherence_time'],
                        help='Coherence time of the photons')
    parser.add_argument('--dephasing-stdev', type=float,
                        default=DEFAULTS['scenario']['dephasing_stdev'],
                        help='Standard deviation of the collective phase '
                        '(rad)')
    parser.add_argument('--rotation-angle', type=float,
                        default=DEFAULTS['scenario']['rotation_angle'],
                        help='Polarization rotation before dephasing (deg)')


def _add_simulation_arguments(parser):
    parser.add_argument('--flux', type=float,
                        default=DEFAULTS['scenario']['flux'],
                        help='Pairs per setting')
    parser.add_argument('--seed', type=int,
                        help='Seed of the simulation (default: '
                        'HIDDENQUTRIT_SEED or {})'
                        ''.format(DEFAULTS['scenario']['seed']))


def _parser():
    parser = ArgumentParser(prog='hiddenqutrit', description=DESCRIPTION)
    parser.add_argument('-v', '--version', action='store_true',
                        help='Return version')
    parser.add_argument('-l', '--log', default='info',
                        help='Logging level: info (default), debug')
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('prepare', help='Write the ideal visible density '
                       'matrix of a scenario')
    _add_scenario_arguments(p)
    p.add_argument('--out', required=True, help='Output json file')

    p = sub.add_parser('simulate', help='Simulate the counts of the ten '
                       'settings')
    _add_scenario_arguments(p)
    _add_simulation_arguments(p)
    p.add_argument('--matrix', help='json file with the density matrix (use '
                   'instead of --scenario)')
    p.add_argument('--out', required=True, help='Output json file')

    p = sub.add_parser('reconstruct', help='Reconstruct the density matrix '
                       'from counts')
    p.add_argument('counts', help='json file with the counts')
    p.add_argument('--method', choices=sorted(METHODS),
                   default=DEFAULTS['tomography']['method'],
                   help='Reconstruction method')
    p.add_argument('--out', required=True, help='Output json file')

    p = sub.add_parser('metrics', help='Compute fidelity to the NOON state, '
                       'concurrence, purity and populations')
    p.add_argument('matrix', help='json file with matrix or reconstruction')
    p.add_argument('--out', required=True, help='Output json file')

    p = sub.add_parser('sweep-delay', help='Populations of psi_plus and '
                       'psi_minus as function of the delay')
    p.add_argument('--range', type=float, nargs=2, metavar=('MIN', 'MAX'),
                   default=(DEFAULTS['sweep']['delay_min'],
                            DEFAULTS['sweep']['delay_max']),
                   help='Range of the delays')
    p.add_argument('--steps', type=int, default=DEFAULTS['sweep']['steps'],
                   help='Number of delays')
    p.add_argument('--coherence-time', type=float,
                   default=DEFAULTS['hilbert']['coherence_time'],
                   help='Coherence time of the photons')
    p.add_argument('--out', required=True, help='Output csv file')

    p = sub.add_parser('paper-figures', help='Simulate and reconstruct all '
                       'the scenarios')
    _add_simulation_arguments(p)
    p.add_argument('--coherence-time', type=float,
                   default=DEFAULTS['hilbert']['coherence_time'],
                   help='Coherence time of the photons')
    p.add_argument('--dephasing-stdev', type=float,
                   default=DEFAULTS['scenario']['dephasing_stdev'],
                   help='Standard deviation of the collective phase (rad)')
    p.add_argument('--rotation-angle', type=float,
                   default=DEFAULTS['scenario']['rotation_angle'],
                   help='Polarization rotation before dephasing (deg)')
    p.add_argument('--parallel', action='store_true',
                   help='Run the scenarios in parallel')
    p.add_argument('--out', required=True, help='Output folder')

    return parser


def _scenario(args, seed=None, flux=DEFAULTS['scenario']['flux']):
    if args.scenario is None:
        raise ValueError('You need to specify --scenario')
    return Scenario(args.scenario, delay=args.delay,
                    coherence_time=args.coherence_time,
                    dephasing_stdev=args.dephasing_stdev,
                    rotation_angle=args.rotation_angle,
                    flux=flux, seed=seed)


def _run(args):
    if args.command == 'prepare':
        write_matrix(prepare(_scenario(args)), args.out)

    elif args.command == 'simulate':
        seed = default_seed() if args.seed is None else args.seed
        if args.matrix is not None:
            rho = read_matrix(args.matrix)
        else:
            rho = prepare(_scenario(args, seed, args.flux))
        records = simulate_counts(rho, table1_settings(), args.flux, seed=seed)
        write_counts(records, args.out)

    elif args.command == 'reconstruct':
        records = read_counts(args.counts)
        write_result(reconstruct(records, args.method), args.out)

    elif args.command == 'metrics':
        write_report(metrics_report(read_matrix(args.matrix)), args.out)

    elif args.command == 'sweep-delay':
        rows = sweep_delay(args.range[0], args.range[1], args.steps,
                           coherence_time=args.coherence_time)
        write_sweep(rows, args.out)

    elif args.command == 'paper-figures':
        seed = default_seed() if args.seed is None else args.seed
        paper_figures(Path(args.out), seed=seed, flux=args.flux,
                      parallel=args.parallel,
                      coherence_time=args.coherence_time,
                      dephasing_stdev=args.dephasing_stdev,
                      rotation_angle=args.rotation_angle)


def main(argv=None):
    """Run the command line interface.

    Parameters
    ----------
    argv : list of str, optional
        arguments (if None, it reads them from sys.argv)

    Returns
    -------
    int
        exit status: 0 if successful, 1 if there was an error
    """
    parser = _parser()
    args = parser.parse_args(argv)

    DATE_FORMAT = '%H:%M:%S'
    if args.log[:1].lower() == 'i':
        lg.setLevel(INFO)
        FORMAT = '{asctime:<10}{message}'

    elif args.log[:1].lower() == 'd':
        lg.setLevel(DEBUG)
        FORMAT = '{asctime:<10}{levelname:<10}{filename:<40}(l. {lineno: 6d})/ {funcName:<40}: {message}'

    else:
        parser.error('Logging level should be info or debug')

    formatter = Formatter(fmt=FORMAT, datefmt=DATE_FORMAT, style='{')
    handler = StreamHandler()
    handler.setFormatter(formatter)

    lg.handlers = []
    lg.addHandler(handler)

    if args.version:
        lg.info('HIDDENQUTRIT v{}'.format(__version__))
        return 0

    if args.command is None:
        parser.print_help()
        return 1

    try:
        _run(args)
    except (FileNotFoundError, UnrecognizedFormat, ReconstructionError,
            ValueError) as err:
        lg.error('{}: {}'.format(type(err).__name__, err))
        return 1

    return 0
