"""Module with the measures of quality of the visible density matrix."""
from dataclasses import asdict, dataclass
from logging import getLogger

from numpy import asarray, kron, maximum, sort, sqrt, trace, vdot
from numpy.linalg import eigh, eigvals

from .polarization import (SIGMA_Y, TOLERANCE, noon_target)

lg = getLogger(__name__)

SPIN_FLIP = kron(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class PopulationSummary:
    """Diagonal of the visible density matrix, in the coupled basis."""
    p_HH: float
    p_psi_plus: float
    p_VV: float
    p_psi_minus: float

    def __post_init__(self):
        total = self.p_HH + self.p_psi_plus + self.p_VV + self.p_psi_minus
        if abs(total - 1) > TOLERANCE:
            raise ValueError('Populations sum up to {:.12f}'.format(total))

    def to_dict(self):
        return asdict(self)


def fidelity(rho, target):
    """Fidelity with a pure state.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        state
    target : instance of PureVisibleState
        pure target

    Returns
    -------
    float
        <target|rho|target>
    """
    t = target.amplitudes
    return float(vdot(t, rho.matrix @ t).real)


def uhlmann_fidelity(rho, sigma):
    """Fidelity between two density matrices.

    Parameters
    ----------
    rho, sigma : instances of VisibleDensityMatrix
        states

    Returns
    -------
    float
        (Tr sqrt(sqrt(rho) sigma sqrt(rho))) ** 2, which is <t|rho|t> when
        sigma is the pure state |t>
    """
    sqrt_rho = _sqrtm_psd(rho.matrix)
    inner = sqrt_rho @ sigma.matrix @ sqrt_rho
    w = maximum(eigh((inner + inner.conj().T) / 2)[0], 0)
    return float(min(sqrt(w).sum() ** 2, 1.))


def _sqrtm_psd(m):
    w, v = eigh(asarray(m))
    return (v * sqrt(maximum(w, 0))) @ v.conj().T


def concurrence(rho):
    """Concurrence of the two photons, treated as two qubits.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        state

    Returns
    -------
    float
        max(0, l1 - l2 - l3 - l4), where l are the square roots of the
        eigenvalues of rho (sy x sy) rho* (sy x sy) in decreasing order

    Notes
    -----
    rho is converted to the product basis [HH, HV, VH, VV] first, where psi_plus
    and psi_minus are (HV +/- VH) / sqrt(2).
    """
    m = rho.to_product()
    flipped = SPIN_FLIP @ m.conj() @ SPIN_FLIP
    ev = eigvals(m @ flipped).real
    lambdas = sort(sqrt(maximum(ev, 0)))[::-1]
    return float(max(0., lambdas[0] - lambdas[1:].sum()))


def populations(rho):
    """Return the populations of HH, psi_plus, VV, psi_minus.

    Notes
    -----
    Linear estimates might have small negative populations, which are kept.
    """
    p = rho.populations
    return PopulationSummary(*(float(x) for x in p))


def purity(rho):
    """Return Tr[rho ** 2]."""
    return float(trace(rho.matrix @ rho.matrix).real)


def metrics_report(rho):
    """Compute all the metrics of one state.

    Parameters
    ----------
    rho : instance of VisibleDensityMatrix
        state

    Returns
    -------
    dict
        with keys 'fidelity_noon', 'concurrence', 'purity', 'populations'
    """
    return {'fidelity_noon': fidelity(rho, noon_target()),
            'concurrence': concurrence(rho),
            'purity': purity(rho),
            'populations': populations(rho).to_dict(),
            }
