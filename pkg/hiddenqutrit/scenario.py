"""Module with the scenarios of two photons and the pipeline which simulates
and reconstructs all of them.

The scenarios are:
    - hv_overlapped : H and V photons, overlapping in time
    - hv_delayed : H and V photons, separated by much more than the coherence
      time
    - hv_partial : H and V photons, partially overlapping
    - noon_indistinguishable : hv_overlapped, after a quarter-waveplate at 45°
    - noon_distinguishable : hv_delayed, after a quarter-waveplate at 45°
    - noon_naive_comparison : same state as noon_distinguishable, to be
      reconstructed assuming indistinguishable photons
    - noon_dephased : noon_indistinguishable after collective dephasing
"""
from dataclasses import dataclass
from functools import partial
from logging import getLogger
from multiprocessing import Pool
from pathlib import Path

from numpy import linspace

from .hilbert import (gaussian_overlap, mode_pair_from_delay,
                      partial_trace_hidden, symmetrize)
from .ioqutrit import write_bars, write_report
from .ioqutrit.matrix import matrix_to_dict
from .measurement import simulate_counts, table1_settings
from .metrics import metrics_report, uhlmann_fidelity
from .polarization import (apply_unitary, collective_dephasing,
                           waveplate_unitary)
from .settings import DEFAULTS, default_seed
from .tomography import (linear_reconstruct, mle_reconstruct,
                         naive_symmetric_reconstruct)

lg = getLogger(__name__)

SCENARIOS = ('hv_overlapped',
             'hv_delayed',
             'hv_partial',
             'noon_indistinguishable',
             'noon_distinguishable',
             'noon_naive_comparison',
             'noon_dephased',
             )
DEFAULT_DELAY = {'hv_overlapped': 'delay_overlapped',
                 'hv_delayed': 'delay_distinguishable',
                 'hv_partial': 'delay_partial',
                 'noon_indistinguishable': 'delay_overlapped',
                 'noon_distinguishable': 'delay_distinguishable',
                 'noon_naive_comparison': 'delay_distinguishable',
                 'noon_dephased': 'delay_overlapped',
                 }
METHODS = {'linear': linear_reconstruct,
           'mle': mle_reconstruct,
           'naive': naive_symmetric_reconstruct,
           }
# the naive reconstruction uses the same counts as figure e
SEED_OFFSET = {'a': 0, 'b': 1, 'c': 2, 'd': 3, 'e': 4, 'f': 4, 'g': 6}


@dataclass
class Scenario:
    """One of the scenarios, with its parameters.

    Parameters
    ----------
    name : str
        one of SCENARIOS
    delay : float, optional
        delay between the photons. If None, it depends on the scenario (see
        DEFAULTS['scenario'])
    coherence_time : float
        coherence time of the photons
    dephasing_stdev : float
        standard deviation of the collective phase, in radians (only
        noon_dephased)
    rotation_angle : float
        rotation of the polarization before dephasing, in degrees (only
        noon_dephased)
    flux : float
        pairs per unit of exposure, in the simulations
    seed : int, optional
        seed of the simulations. If None, it uses default_seed()
    hidden_dim : int
        number of hidden modes
    """
    name: str
    delay: float = None
    coherence_time: float = DEFAULTS['hilbert']['coherence_time']
    dephasing_stdev: float = DEFAULTS['scenario']['dephasing_stdev']
    rotation_angle: float = DEFAULTS['scenario']['rotation_angle']
    flux: float = DEFAULTS['scenario']['flux']
    seed: int = None
    hidden_dim: int = DEFAULTS['hilbert']['hidden_dim']

    def __post_init__(self):
        if self.name not in SCENARIOS:
            raise ValueError('Unknown scenario ' + str(self.name))
        if self.delay is None:
            self.delay = DEFAULTS['scenario'][DEFAULT_DELAY[self.name]]
        if self.seed is None:
            self.seed = default_seed()
        if not self.coherence_time > 0:
            raise ValueError('Coherence time should be positive')
        if not self.flux > 0:
            raise ValueError('Flux should be positive')
        if self.dephasing_stdev < 0:
            raise ValueError('Standard deviation of the phase should be '
                             'non-negative')

    @property
    def gamma(self):
        return gaussian_overlap(self.delay, self.coherence_time)


def prepare(scenario):
    """Compute the visible density matrix of a scenario.

    Parameters
    ----------
    scenario : instance of Scenario or str
        scenario (or its name, with default parameters)

    Returns
    -------
    instance of VisibleDensityMatrix
        partial trace of the full state of the two photons, after the
        waveplate and the dephasing
    """
    if isinstance(scenario, str):
        scenario = Scenario(scenario)

    modes = mode_pair_from_delay(('H', 'V'), scenario.delay,
                                 scenario.coherence_time, scenario.hidden_dim)
    full = symmetrize(*modes).density_matrix()
    rho = partial_trace_hidden(full)

    if scenario.name.startswith('noon'):
        rho = apply_unitary(rho, waveplate_unitary('quarter', 45))

    if scenario.name == 'noon_dephased':
        rho = collective_dephasing(rho, scenario.dephasing_stdev,
                                   scenario.rotation_angle)

    lg.debug('Scenario {}: {}'.format(scenario.name, rho))
    return rho


def reconstruct(records, method):
    """Run one of the reconstructions ('linear', 'mle', 'naive')."""
    try:
        funct = METHODS[method]
    except KeyError:
        raise ValueError('Unknown method ' + str(method))
    return funct(records)


def sweep_delay(delay_min=None, delay_max=None, steps=None,
                coherence_time=None, hidden_dim=None):
    """Compute the populations of psi_plus and psi_minus as function of the
    delay between H and V photons.

    Parameters
    ----------
    delay_min, delay_max : float
        range of the delays
    steps : int
        number of delays (at least 2)
    coherence_time : float
        coherence time of the photons
    hidden_dim : int
        number of hidden modes

    Returns
    -------
    list of tuple
        delay, gamma, population of psi_plus, population of psi_minus
    """
    if delay_min is None:
        delay_min = DEFAULTS['sweep']['delay_min']
    if delay_max is None:
        delay_max = DEFAULTS['sweep']['delay_max']
    if steps is None:
        steps = DEFAULTS['sweep']['steps']
    if coherence_time is None:
        coherence_time = DEFAULTS['hilbert']['coherence_time']
    if hidden_dim is None:
        hidden_dim = DEFAULTS['hilbert']['hidden_dim']
    if steps < 2:
        raise ValueError('You need at least 2 steps')
    if delay_max < delay_min:
        raise ValueError('delay_max should be larger than delay_min')

    rows = []
    for delay in linspace(delay_min, delay_max, steps):
        scenario = Scenario('hv_partial', delay=float(delay),
                            coherence_time=coherence_time,
                            hidden_dim=hidden_dim)
        rho = prepare(scenario)
        rows.append((float(delay), scenario.gamma,
                     float(rho.populations[1]), float(rho.psi_minus)))
    return rows


def run_figure(letter, seed, flux=None, out_dir=None, **kwargs):
    """Simulate and reconstruct the state of one figure.

    Parameters
    ----------
    letter : str
        figure, between 'a' and 'g' (see DEFAULTS['figures'])
    seed : int
        master seed (the figure adds its own offset)
    flux : float
        pairs per setting
    out_dir : path to folder, optional
        if specified, it writes fig<letter>.json, the bars of the estimate
        (fig<letter>_re.csv and fig<letter>_im.csv) and the bars of the truth
        (fig<letter>_truth_re.csv and fig<letter>_truth_im.csv)
    kwargs
        parameters passed to Scenario

    Returns
    -------
    dict
        with the truth, the estimate and their metrics
    """
    if flux is None:
        flux = DEFAULTS['scenario']['flux']
    name, method = DEFAULTS['figures'][letter]
    scenario = Scenario(name, flux=flux, seed=seed + SEED_OFFSET[letter],
                        **kwargs)

    truth = prepare(scenario)
    records = simulate_counts(truth, table1_settings(), scenario.flux,
                              seed=scenario.seed)
    result = reconstruct(records, method)

    figure = {'figure': letter,
              'scenario': scenario.name,
              'method': method,
              'seed': scenario.seed,
              'flux': scenario.flux,
              'delay': scenario.delay,
              'truth': matrix_to_dict(truth),
              'truth_metrics': metrics_report(truth),
              'estimate': result.to_dict(),
              'estimate_metrics': metrics_report(result.estimate),
              }
    if method == 'mle':
        figure['fidelity_to_truth'] = uhlmann_fidelity(truth, result.estimate)

    if out_dir is not None:
        out_dir = Path(out_dir)
        write_report(figure, out_dir / ('fig' + letter + '.json'))
        write_bars(result.estimate, out_dir / ('fig' + letter + '_re.csv'),
                   out_dir / ('fig' + letter + '_im.csv'))
        write_bars(truth, out_dir / ('fig' + letter + '_truth_re.csv'),
                   out_dir / ('fig' + letter + '_truth_im.csv'))

    lg.info('Figure {} ({}, {}): populations {}'.format(
        letter, name, method, figure['estimate_metrics']['populations']))
    return figure


def paper_figures(out_dir=None, seed=None, flux=None, parallel=False,
                  **kwargs):
    """Simulate and reconstruct all the figures, from 'a' to 'g'.

    Parameters
    ----------
    out_dir : path to folder, optional
        folder where to write the files (see run_figure)
    seed : int, optional
        master seed. If None, it uses default_seed()
    flux : float
        pairs per setting
    parallel : bool
        run the figures in separate processes
    kwargs
        parameters passed to Scenario

    Returns
    -------
    dict
        for each letter, the output of run_figure
    """
    if seed is None:
        seed = default_seed()
    if out_dir is not None:
        Path(out_dir).mkdir(parents=True, exist_ok=True)

    letters = sorted(DEFAULTS['figures'])
    funct = partial(run_figure, seed=seed, flux=flux, out_dir=out_dir,
                    **kwargs)
    if parallel:
        with Pool() as p:
            figures = p.map(funct, letters)
    else:
        figures = [funct(letter) for letter in letters]

    return dict(zip(letters, figures))
