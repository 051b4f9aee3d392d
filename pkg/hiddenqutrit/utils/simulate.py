"""Functions to create random states and unitaries, mostly for testing.

All the functions take a numpy random Generator (or a seed), so they never
touch the global numpy random state.
"""
from logging import getLogger

from numpy import sqrt, zeros
from numpy.random import default_rng
from scipy.stats import unitary_group

lg = getLogger(__name__)


def _rng(rng):
    if rng is None or isinstance(rng, int):
        return default_rng(rng)
    return rng


def _ginibre(n_rows, n_cols, rng):
    return (rng.standard_normal((n_rows, n_cols)) +
            1j * rng.standard_normal((n_rows, n_cols))) / sqrt(2)


def random_full_state(hidden_dim=2, rng=None):
    """Create a random bosonic state of two photons.

    Parameters
    ----------
    hidden_dim : int
        number of hidden modes
    rng : instance of numpy.random.Generator or int, optional
        random generator (or seed)

    Returns
    -------
    instance of FullTwoPhotonState
        symmetric part of a random complex vector, normalized
    """
    from ..hilbert import FullTwoPhotonState

    rng = _rng(rng)
    n = 2 * hidden_dim
    amplitudes = _ginibre(n, n, rng)
    amplitudes = (amplitudes + amplitudes.T) / 2
    return FullTwoPhotonState(amplitudes.flatten(), hidden_dim)


def random_full_density_matrix(hidden_dim=2, n_states=3, rng=None):
    """Create a random mixture of bosonic states of two photons.

    Parameters
    ----------
    hidden_dim : int
        number of hidden modes
    n_states : int
        number of pure states in the mixture
    rng : instance of numpy.random.Generator or int, optional
        random generator (or seed)

    Returns
    -------
    instance of FullDensityMatrix
        mixture with weights drawn from a flat Dirichlet distribution
    """
    from ..hilbert import mixture

    rng = _rng(rng)
    states = [random_full_state(hidden_dim, rng) for _ in range(n_states)]
    weights = rng.dirichlet([1] * n_states)
    return mixture(states, weights)


def random_visible_density_matrix(rng=None, rank=None):
    """Create a random visible density matrix, with the block structure.

    Parameters
    ----------
    rng : instance of numpy.random.Generator or int, optional
        random generator (or seed)
    rank : int, optional
        rank of the symmetric block (between 1 and 3). If None, it's full rank
        and psi_minus has a random population. If specified, psi_minus is
        empty.

    Returns
    -------
    instance of VisibleDensityMatrix
    """
    from ..polarization import VisibleDensityMatrix

    rng = _rng(rng)
    if rank is None:
        W = _ginibre(3, 3, rng)
        psi_minus = rng.exponential()
    else:
        W = _ginibre(3, rank, rng)
        psi_minus = 0

    rho = zeros((4, 4), dtype=complex)
    rho[:3, :3] = W @ W.conj().T
    rho[3, 3] = psi_minus
    rho /= rho.trace().real
    return VisibleDensityMatrix((rho + rho.conj().T) / 2)


def random_jones_unitary(rng=None):
    """Create a random (Haar-distributed) unitary on one photon.

    Returns
    -------
    instance of JonesUnitary
    """
    from ..polarization import JonesUnitary

    rng = _rng(rng)
    return JonesUnitary(unitary_group.rvs(2, random_state=rng))
