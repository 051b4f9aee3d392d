"""Module with the measurement design of the tomography: waveplate settings,
detection operators, Born probabilities and simulated coincidence counts.

Each setting is a half-waveplate (angle h) followed by a quarter-waveplate
(angle q) in front of a polarizer. The coincidence logic projects on two H
photons (kind 'HH') or on one H and one V photon (kind 'HV').
"""
from dataclasses import dataclass
from functools import lru_cache
from logging import getLogger

from numpy import array, asarray, diag, einsum, zeros
from numpy.random import default_rng

from .polarization import (ANTISYMMETRIC, SYMMETRIC, TOLERANCE,
                           two_photon_unitary, waveplate_unitary)

lg = getLogger(__name__)

# projectors in the coupled basis [HH, psi_plus, VV, psi_minus]
PROJECTOR_KINDS = {'HH': diag([1, 0, 0, 0]).astype(complex),
                   'HV': diag([0, 1, 0, 1]).astype(complex),
                   }


@dataclass(frozen=True)
class MeasurementSetting:
    """One measurement setting.

    Parameters
    ----------
    h : float
        angle of the half-waveplate, in degrees
    q : float
        angle of the quarter-waveplate, in degrees
    kind : str
        'HH' or 'HV', the coincidence projector
    """
    h: float
    q: float
    kind: str

    def __post_init__(self):
        if self.kind not in PROJECTOR_KINDS:
            raise ValueError('Projector kind should be "HH" or "HV", not ' +
                             str(self.kind))
        object.__setattr__(self, 'h', float(self.h))
        object.__setattr__(self, 'q', float(self.q))

    def __str__(self):
        return 'h={:g}° q={:g}° {}'.format(self.h, self.q, self.kind)


@dataclass(frozen=True)
class CountRecord:
    """Coincidence counts recorded with one setting.

    Parameters
    ----------
    setting : instance of MeasurementSetting
        measurement setting
    counts : int
        number of coincidences, non-negative
    exposure : float
        relative acquisition time, positive
    """
    setting: MeasurementSetting
    counts: int
    exposure: float = 1.

    def __post_init__(self):
        if int(self.counts) != self.counts or self.counts < 0:
            raise ValueError('Counts should be a non-negative integer, not ' +
                             str(self.counts))
        if not self.exposure > 0:
            raise ValueError('Exposure should be positive, not ' +
                             str(self.exposure))
        object.__setattr__(self, 'counts', int(self.counts))
        object.__setattr__(self, 'exposure', float(self.exposure))

    @property
    def rate(self):
        """Counts per unit of exposure."""
        return self.counts / self.exposure


def table1_settings():
    """Return the ten settings of the tomography, in the order of acquisition.

    Returns
    -------
    list of MeasurementSetting
        seven rank-1 (HH) and three rank-2 (HV) settings
    """
    rows = [(0, 0, 'HH'),
            (22.5, 45, 'HV'),
            (45, 22.5, 'HH'),
            (0, 0, 'HV'),
            (22.5, 0, 'HH'),
            (11.25, 0, 'HH'),
            (22.5, 0, 'HV'),
            (45, 0, 'HH'),
            (0, 22.5, 'HV'),
            (22.5, 22.5, 'HH'),
            ]
    return [MeasurementSetting(h, q, kind) for h, q, kind in rows]


def detection_operator(setting):
    """Operator measured with one setting.

    Parameters
    ----------
    setting : instance of MeasurementSetting
        waveplate angles and projector

    Returns
    -------
    ndarray
        4x4 projector in the coupled basis, W P W^dagger, where W is the
        two-photon unitary of U = U_half(h) U_quarter(q)

    Notes
    -----
    The result is cached, so it's read-only.
    """
    return _detection_operator(setting.h, setting.q, setting.kind)


@lru_cache(maxsize=4096)
def _detection_operator(h, q, kind):
    U = waveplate_unitary('half', h) @ waveplate_unitary('quarter', q)
    W = two_photon_unitary(U)
    O = W @ PROJECTOR_KINDS[kind] @ W.conj().T
    O[SYMMETRIC, ANTISYMMETRIC] = 0
    O[ANTISYMMETRIC, SYMMETRIC] = 0
    O = (O + O.conj().T) / 2
    O.flags.writeable = False
    return O


def probabilities(rho, settings):
    """Born probabilities of a list of settings.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        state
    settings : list of MeasurementSetting
        settings

    Returns
    -------
    ndarray
        one probability per setting (not clamped)
    """
    if len(settings) == 0:
        return zeros(0)
    ops = array([detection_operator(s) for s in settings])
    return einsum('ij,sji->s', asarray(rho.matrix), ops).real


def born_probability(rho, setting):
    """Probability of a coincidence with one setting.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        state
    setting : instance of MeasurementSetting
        setting

    Returns
    -------
    float
        Tr[rho O], between 0 and 1

    Raises
    ------
    ValueError
        if the probability is below -1e-9 or above 1 + 1e-9
    """
    p = float(probabilities(rho, [setting])[0])
    if p < -TOLERANCE or p > 1 + TOLERANCE:
        raise ValueError('Probability {:.3e} of setting {} is not between 0 '
                         'and 1'.format(p, setting))
    return min(max(p, 0.), 1.)


def simulate_counts(rho, settings, flux, seed=None, exposure=1.):
    """Simulate Poissonian coincidence counts.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        state of the photons
    settings : list of MeasurementSetting
        settings to measure
    flux : float
        mean number of pairs per unit of exposure
    seed : int, optional
        seed of the random generator
    exposure : float or list of float
        exposure of each setting

    Returns
    -------
    list of CountRecord
        one record per setting
    """
    if not flux > 0:
        raise ValueError('Flux should be positive')

    rng = default_rng(seed)
    if isinstance(exposure, (int, float)):
        exposure = [exposure] * len(settings)
    if len(exposure) != len(settings):
        raise ValueError('You need one exposure per setting')

    records = []
    for setting, t in zip(settings, exposure):
        p = born_probability(rho, setting)
        n = rng.poisson(flux * t * p)
        records.append(CountRecord(setting, int(n), t))

    lg.info('Simulated {} records with {} coincidences in total'.format(
        len(records), sum(r.counts for r in records)))
    return records
