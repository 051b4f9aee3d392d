"""Module to model two photons in the full Hilbert space, made of the visible
(polarization) and the hidden degrees of freedom (for example, arrival time).

Each photon lives in polarization x hidden, a space of dimension 2D where D is
the number of hidden modes. Two photons live in the product of two such
spaces, of dimension (2D) ** 2, and the amplitudes are indexed as
(p1, h1, p2, h2). Photons are bosons, so the amplitudes are symmetric under
exchange of (p1, h1) and (p2, h2).

This is the brute-force description: the visible density matrix is computed
by tracing out the hidden modes explicitly.
"""
from logging import getLogger

from numpy import (abs, allclose, asarray, einsum, exp, eye, kron, outer,
                   sqrt, trace, vdot, zeros)
from numpy.linalg import eigvalsh, norm

from .polarization import (VisibleDensityMatrix, coupled_to_product,
                           polarization_vector)
from .utils.exceptions import InvalidState

lg = getLogger(__name__)

NORM_TOLERANCE = 1e-12
MATRIX_TOLERANCE = 1e-12
POSITIVE_TOLERANCE = 1e-9
BOSONIC_TOLERANCE = 1e-10


class HiddenModeBasis:
    """Orthonormal basis of the hidden modes (for example, time bins).

    Parameters
    ----------
    dimension : int
        number of hidden modes
    """
    def __init__(self, dimension=2):
        if int(dimension) != dimension or dimension < 1:
            raise ValueError('Number of hidden modes should be a positive '
                             'integer')
        self.dimension = int(dimension)

    def __len__(self):
        return self.dimension

    def vector(self, index):
        """Return the unit vector of one hidden mode."""
        if not 0 <= index < self.dimension:
            raise ValueError('Hidden mode {} does not exist (dimension {})'
                             ''.format(index, self.dimension))
        e = zeros(self.dimension, dtype=complex)
        e[index] = 1
        return e


class SinglePhotonMode:
    """Mode of one photon: polarization and hidden mode.

    Parameters
    ----------
    polarization : ndarray
        complex vector with the amplitudes of H and V
    hidden : ndarray
        complex vector with the amplitudes of the hidden modes

    Raises
    ------
    InvalidState
        if one of the two vectors is not normalized
    """
    def __init__(self, polarization, hidden):
        polarization = asarray(polarization, dtype=complex)
        hidden = asarray(hidden, dtype=complex)
        if polarization.shape != (2, ) or hidden.ndim != 1:
            raise ValueError('Polarization should have 2 amplitudes and '
                             'hidden should be a vector')
        for name, v in (('polarization', polarization), ('hidden', hidden)):
            if abs(norm(v) - 1) > NORM_TOLERANCE:
                raise InvalidState(name + ' vector is not normalized')

        self.polarization = polarization
        self.hidden = hidden
        self.polarization.flags.writeable = False
        self.hidden.flags.writeable = False

    @classmethod
    def from_labels(cls, polarization='H', hidden_index=0, hidden_dim=2):
        """Create a photon from a polarization label (H, V, D, A, R, L) and the
        index of one hidden mode."""
        return cls(polarization_vector(polarization),
                   HiddenModeBasis(hidden_dim).vector(hidden_index))

    @property
    def hidden_dim(self):
        return self.hidden.shape[0]

    @property
    def vector(self):
        """Vector in the single-photon space, indexed as (p, h)."""
        return kron(self.polarization, self.hidden)


class FullTwoPhotonState:
    """Pure state of two photons, including the hidden degrees of freedom.

    Parameters
    ----------
    amplitudes : ndarray
        complex vector of length (2D) ** 2, indexed as (p1, h1, p2, h2). It
        gets normalized.
    hidden_dim : int
        number of hidden modes (D)

    Raises
    ------
    InvalidState
        if the amplitudes are not symmetric under exchange of the photons, or
        if they are all zero.
    """
    def __init__(self, amplitudes, hidden_dim):
        amplitudes = asarray(amplitudes, dtype=complex).flatten()
        n = 2 * HiddenModeBasis(hidden_dim).dimension
        if amplitudes.shape != (n ** 2, ):
            raise ValueError('Two photons with {} hidden modes need {} '
                             'amplitudes'.format(hidden_dim, n ** 2))

        size = norm(amplitudes)
        if size == 0:
            raise InvalidState('Two-photon state has zero norm')
        amplitudes = amplitudes / size

        if norm(_exchange(amplitudes, n) - amplitudes) > NORM_TOLERANCE:
            raise InvalidState('Two-photon state is not symmetric under '
                               'exchange of the photons')

        self.hidden_dim = int(hidden_dim)
        self._amplitudes = amplitudes
        self._amplitudes.flags.writeable = False

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def norm(self):
        return norm(self._amplitudes)

    def is_bosonic(self, tol=BOSONIC_TOLERANCE):
        """Check that X_vis x X_hid leaves the state unchanged."""
        X = exchange_operator(self.hidden_dim)
        return norm(X @ self._amplitudes - self._amplitudes) < tol

    @property
    def tensor(self):
        """Amplitudes as 4-dimensional array (p1, h1, p2, h2)."""
        D = self.hidden_dim
        return self._amplitudes.reshape(2, D, 2, D)

    def density_matrix(self):
        """Return the density matrix of the pure state."""
        return FullDensityMatrix(outer(self._amplitudes,
                                       self._amplitudes.conj()),
                                 self.hidden_dim, weights=[1.],
                                 states=[self])


class FullDensityMatrix:
    """Density matrix of two photons, including the hidden degrees of freedom.

    Parameters
    ----------
    matrix : ndarray
        (2D) ** 2 x (2D) ** 2 complex matrix, with rows and columns indexed as
        (p1, h1, p2, h2)
    hidden_dim : int
        number of hidden modes (D)
    weights : list of float, optional
        weights of the pure states in the mixture (only as provenance)
    states : list of FullTwoPhotonState, optional
        pure states in the mixture (only as provenance)

    Raises
    ------
    InvalidState
        if the matrix is not Hermitian, does not have trace 1 or is not
        positive.

    Notes
    -----
    Exchange symmetry is not checked here, so that you can build the density
    matrix of distinguishable particles as well. Use is_bosonic to check it;
    partial_trace_hidden only accepts bosonic density matrices.
    """
    def __init__(self, matrix, hidden_dim, weights=None, states=None):
        matrix = asarray(matrix, dtype=complex)
        n = 2 * HiddenModeBasis(hidden_dim).dimension
        if matrix.shape != (n ** 2, n ** 2):
            raise ValueError('Density matrix of two photons with {} hidden '
                             'modes should be {}x{}'.format(hidden_dim, n ** 2,
                                                            n ** 2))
        if not allclose(matrix, matrix.conj().T, rtol=0,
                        atol=MATRIX_TOLERANCE):
            raise InvalidState('Density matrix is not Hermitian')
        if abs(trace(matrix) - 1) > MATRIX_TOLERANCE:
            raise InvalidState('Density matrix does not have trace 1')
        if eigvalsh(matrix).min() < -POSITIVE_TOLERANCE:
            raise InvalidState('Density matrix is not positive')

        self.hidden_dim = int(hidden_dim)
        self.weights = weights
        self.states = states
        self._matrix = matrix
        self._matrix.flags.writeable = False

    @property
    def matrix(self):
        return self._matrix

    def is_bosonic(self, tol=BOSONIC_TOLERANCE):
        """Check that the density matrix is supported on the subspace which is
        symmetric under exchange of the two photons (X rho = rho)."""
        X = exchange_operator(self.hidden_dim)
        return norm(X @ self._matrix - self._matrix) < tol


def exchange_operator(hidden_dim):
    """Operator exchanging the two photons (both visible and hidden parts).

    Parameters
    ----------
    hidden_dim : int
        number of hidden modes

    Returns
    -------
    ndarray
        (2D) ** 2 x (2D) ** 2 permutation matrix
    """
    n = 2 * hidden_dim
    return _exchange(eye(n ** 2), n)


def _exchange(x, n):
    """Exchange the two photons on the first axis of a vector or matrix."""
    x = asarray(x)
    rest = x.shape[1:]
    swapped = x.reshape((n, n) + rest).swapaxes(0, 1)
    return swapped.reshape(x.shape)


def symmetrize(a, b):
    """Create the bosonic state of two photons in modes a and b.

    Parameters
    ----------
    a, b : instances of SinglePhotonMode
        modes of the two photons

    Returns
    -------
    instance of FullTwoPhotonState
        (|a>|b> + |b>|a>), normalized

    Notes
    -----
    The squared norm of |a>|b> + |b>|a> is 2 + 2 |<a|b>| ** 2, so it's never
    zero for bosons.
    """
    if a.hidden_dim != b.hidden_dim:
        raise ValueError('The two photons have different number of hidden '
                         'modes ({} and {})'.format(a.hidden_dim,
                                                    b.hidden_dim))
    va = a.vector
    vb = b.vector
    return FullTwoPhotonState(kron(va, vb) + kron(vb, va), a.hidden_dim)


def mixture(states, weights):
    """Create the density matrix of a mixture of pure two-photon states.

    Parameters
    ----------
    states : list of FullTwoPhotonState
        pure states, with the same number of hidden modes
    weights : list of float
        non-negative weights, which sum up to 1

    Returns
    -------
    instance of FullDensityMatrix
    """
    weights = asarray(weights, dtype=float)
    if len(states) == 0 or len(states) != len(weights):
        raise ValueError('You need one weight for each state')
    if (weights < 0).any() or abs(weights.sum() - 1) > NORM_TOLERANCE:
        raise ValueError('Weights should be non-negative and sum up to 1')
    hidden_dim = states[0].hidden_dim
    if any(s.hidden_dim != hidden_dim for s in states):
        raise ValueError('All the states should have the same number of '
                         'hidden modes')

    matrix = sum(w * outer(s.amplitudes, s.amplitudes.conj())
                 for w, s in zip(weights, states))
    return FullDensityMatrix(matrix, hidden_dim, weights=list(weights),
                             states=list(states))


def gaussian_overlap(delay, coherence_time):
    """Overlap between two identical Gaussian wavepackets, separated by delay.

    Parameters
    ----------
    delay : float
        delay between the two photons
    coherence_time : float
        coherence time of the photons, in the same unit as delay

    Returns
    -------
    float
        exp(-delay ** 2 / (2 coherence_time ** 2)), between 0 and 1
    """
    if coherence_time <= 0:
        raise ValueError('Coherence time should be positive')
    return float(exp(-delay ** 2 / (2 * coherence_time ** 2)))


def mode_pair_from_delay(polarizations=('H', 'V'), delay=0.,
                         coherence_time=100., hidden_dim=2):
    """Create two photons whose hidden modes overlap as two delayed wavepackets.

    Parameters
    ----------
    polarizations : tuple of two str or ndarray
        polarizations of the first and the second photon
    delay : float
        delay between the photons
    coherence_time : float
        coherence time of the photons
    hidden_dim : int
        number of hidden modes

    Returns
    -------
    tuple of SinglePhotonMode
        the first photon is in hidden mode e0, the second in
        gamma e0 + sqrt(1 - gamma ** 2) e1, with gamma the Gaussian overlap.

    Notes
    -----
    Two hidden modes are enough to describe the overlap of a pair of photons,
    whatever the delay.
    """
    gamma = gaussian_overlap(delay, coherence_time)
    basis = HiddenModeBasis(hidden_dim)

    first = basis.vector(0)
    if gamma == 1:
        second = basis.vector(0)
    elif hidden_dim < 2:
        raise ValueError('Delayed photons need at least 2 hidden modes')
    else:
        second = gamma * basis.vector(0) + sqrt(1 - gamma ** 2) * basis.vector(1)

    pol1, pol2 = polarizations
    return (SinglePhotonMode(polarization_vector(pol1), first),
            SinglePhotonMode(polarization_vector(pol2), second))


def partial_trace_hidden(rho):
    """Trace out the hidden degrees of freedom.

    Parameters
    ----------
    rho : instance of FullDensityMatrix
        bosonic density matrix of the two photons

    Returns
    -------
    instance of VisibleDensityMatrix
        density matrix of polarization in the basis [HH, psi_plus, VV,
        psi_minus]. The coherences between symmetric and antisymmetric states
        are below 1e-10 and then set to zero.

    Raises
    ------
    InvalidState
        if rho is not symmetric under exchange of the photons.
    """
    if not rho.is_bosonic():
        raise InvalidState('Partial trace needs a bosonic density matrix')

    D = rho.hidden_dim
    full = rho.matrix.reshape(2, D, 2, D, 2, D, 2, D)
    product = einsum('aibjckdl,ik,jl->abcd', full, eye(D), eye(D))
    return VisibleDensityMatrix.from_product(product.reshape(4, 4))


def born_full(rho, b_vis):
    """Expectation value of a visible observable on the full state.

    Parameters
    ----------
    rho : instance of FullDensityMatrix
        density matrix of the two photons
    b_vis : ndarray
        4x4 Hermitian operator on polarization, in the coupled basis

    Returns
    -------
    float
        Tr[rho (B_vis x I_hid)]
    """
    b_vis = asarray(b_vis, dtype=complex)
    if b_vis.shape != (4, 4):
        raise ValueError('Visible operator should be 4x4')

    D = rho.hidden_dim
    b_product = coupled_to_product(b_vis).reshape(2, 2, 2, 2)
    full = einsum('abcd,ik,jl->aibjckdl', b_product, eye(D), eye(D))
    full = full.reshape(rho.matrix.shape)
    return float(trace(rho.matrix @ full).real)


def hidden_overlap(a, b):
    """Overlap <a|b> between the hidden parts of two photons."""
    return vdot(a.hidden, b.hidden)
