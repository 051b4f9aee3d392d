"""Default parameters of the simulations and of the reconstructions.

All the values can be changed from the command line.
"""
from logging import getLogger
from math import log, sqrt
from os import environ

lg = getLogger(__name__)

SEED_VARIABLE = 'HIDDENQUTRIT_SEED'

COHERENCE_TIME = 100.  # fs

# DO NOT DUPLICATE NAMES
DEFAULTS = {}
DEFAULTS['hilbert'] = {'hidden_dim': 2,
                       'coherence_time': COHERENCE_TIME,
                       }
DEFAULTS['scenario'] = {'delay_overlapped': 0.,
                        'delay_distinguishable': 10 * COHERENCE_TIME,
                        # gamma ** 2 = 1 / 3
                        'delay_partial': COHERENCE_TIME * sqrt(log(3)),
                        'dephasing_stdev': 2.,  # rad
                        'rotation_angle': 5.,  # deg
                        'flux': 1e5,
                        'seed': 42,
                        }
DEFAULTS['tomography'] = {'method': 'mle',
                          'max_iter': 100000,
                          'tol': 1e-10,
                          'init_mixing': 1e-4,
                          }
DEFAULTS['sweep'] = {'delay_min': 0.,
                     'delay_max': 3 * COHERENCE_TIME,
                     'steps': 50,
                     }
DEFAULTS['figures'] = {'a': ('hv_overlapped', 'mle'),
                       'b': ('hv_delayed', 'mle'),
                       'c': ('hv_partial', 'mle'),
                       'd': ('noon_indistinguishable', 'mle'),
                       'e': ('noon_distinguishable', 'mle'),
                       'f': ('noon_naive_comparison', 'naive'),
                       'g': ('noon_dephased', 'mle'),
                       }


def default_seed():
    """Return the seed in the environmental variable HIDDENQUTRIT_SEED, if
    defined, otherwise the default seed."""
    value = environ.get(SEED_VARIABLE)
    if value is None:
        return DEFAULTS['scenario']['seed']
    try:
        return int(value)
    except ValueError:
        raise ValueError(SEED_VARIABLE + ' should be an integer, not ' +
                         value)
